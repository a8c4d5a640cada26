//! Python bindings. Sets cross the boundary as plain lists of ints
//! (ascending), families and collections as lists of lists; every function
//! taking a context receives `n` and `k` directly. Library errors become
//! `ValueError`s carrying the library message.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use lcif_core::document::{parse_document as parse_doc, InputDocument, Payload};
use lcif_core::generators;
use lcif_core::intersect;
use lcif_core::mlcif;
use lcif_core::sets;
use lcif_core::sets::{GeneratorCollection, GeneratorSet, GroundContext, KSet, SetFamily};
use lcif_core::shift;
use lcif_core::Error;

fn value_err(err: Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn context(n: u32, k: u32) -> PyResult<GroundContext> {
    GroundContext::new(n, k).map_err(value_err)
}

fn kset(elements: Vec<u32>, ctx: &GroundContext) -> PyResult<KSet> {
    KSet::new(elements, ctx).map_err(value_err)
}

fn generator(elements: Vec<u32>, ctx: &GroundContext) -> PyResult<GeneratorSet> {
    GeneratorSet::new(elements, ctx).map_err(value_err)
}

fn family(n: u32, k: u32, members: Vec<Vec<u32>>) -> PyResult<SetFamily> {
    let ctx = context(n, k)?;
    let members = members
        .into_iter()
        .map(|m| kset(m, &ctx))
        .collect::<PyResult<Vec<_>>>()?;
    SetFamily::new(ctx, members).map_err(value_err)
}

fn collection(n: u32, k: u32, generators: Vec<Vec<u32>>) -> PyResult<GeneratorCollection> {
    let ctx = context(n, k)?;
    let generators = generators
        .into_iter()
        .map(|g| generator(g, &ctx))
        .collect::<PyResult<Vec<_>>>()?;
    GeneratorCollection::new(ctx, generators).map_err(value_err)
}

fn family_out(f: &SetFamily) -> Vec<Vec<u32>> {
    f.members().iter().map(|m| m.elements().to_vec()).collect()
}

fn collection_out(gc: &GeneratorCollection) -> Vec<Vec<u32>> {
    gc.generators()
        .iter()
        .map(|g| g.elements().to_vec())
        .collect()
}

/// Count of elements of `xs` that are <= `level`.
#[pyfunction]
fn mu(xs: Vec<u32>, level: u32) -> usize {
    xs.iter().filter(|&&e| e <= level).count()
}

/// Componentwise order on equal-size ascending sequences.
#[pyfunction]
fn leq(a: Vec<u32>, b: Vec<u32>) -> PyResult<bool> {
    sets::leq(&a, &b).map_err(value_err)
}

/// Extended domination: len(a) >= len(b) and a[i] <= b[i] on the prefix.
#[pyfunction]
fn preceq(a: Vec<u32>, b: Vec<u32>) -> bool {
    sets::preceq(&a, &b)
}

/// All k-sets componentwise below `a`.
#[pyfunction]
fn lower_closure(n: u32, k: u32, a: Vec<u32>) -> PyResult<Vec<Vec<u32>>> {
    let ctx = context(n, k)?;
    let a = kset(a, &ctx)?;
    Ok(family_out(&sets::lower_closure(&a, &ctx)))
}

/// The family generated by a collection of generator sets.
#[pyfunction]
fn build_family(n: u32, k: u32, gens: Vec<Vec<u32>>) -> PyResult<Vec<Vec<u32>>> {
    let gc = collection(n, k, gens)?;
    Ok(family_out(&generators::build_family(&gc)))
}

/// Maximal sets of a left-compressed family, as generators.
#[pyfunction]
fn extract_generators(n: u32, k: u32, members: Vec<Vec<u32>>) -> PyResult<Vec<Vec<u32>>> {
    let f = family(n, k, members)?;
    generators::extract_generators(&f)
        .map(|gc| collection_out(&gc))
        .map_err(value_err)
}

/// (type, truncation) of a generator.
#[pyfunction]
fn generator_type(n: u32, k: u32, g: Vec<u32>) -> PyResult<(usize, Vec<u32>)> {
    let ctx = context(n, k)?;
    let g = generator(g, &ctx)?;
    let typed = generators::type_of(&g, &ctx).map_err(value_err)?;
    Ok((typed.type_index, typed.truncation.elements().to_vec()))
}

/// Truncate every generator to its type prefix and prune dominated ones.
#[pyfunction]
fn pi_collection(n: u32, k: u32, gens: Vec<Vec<u32>>) -> PyResult<Vec<Vec<u32>>> {
    let gc = collection(n, k, gens)?;
    generators::pi_collection(&gc)
        .map(|t| collection_out(&t))
        .map_err(value_err)
}

/// Smallest level where the prefix counts beat the level, or None.
#[pyfunction]
fn criterion_level(g: Vec<u32>, h: Vec<u32>) -> Option<u32> {
    intersect::criterion(&g, &h).level
}

/// Exhaustive strong-intersection oracle.
#[pyfunction]
fn strongly_intersecting(g: Vec<u32>, h: Vec<u32>) -> bool {
    intersect::strongly_intersecting_oracle(&g, &h)
}

/// Whether every generator pair (including self-pairs) passes the
/// criterion.
#[pyfunction]
fn check_generators(n: u32, k: u32, gens: Vec<Vec<u32>>) -> PyResult<bool> {
    let gc = collection(n, k, gens)?;
    intersect::check_collection(&gc)
        .map(|report| report.passes())
        .map_err(value_err)
}

/// Disjoint witness pair for a generator pair failing the criterion.
#[pyfunction]
fn witness_pair(n: u32, k: u32, g: Vec<u32>, h: Vec<u32>) -> PyResult<(Vec<u32>, Vec<u32>)> {
    let ctx = context(n, k)?;
    let g = generator(g, &ctx)?;
    let h = generator(h, &ctx)?;
    let trace = intersect::witness_construct(&g, &h, &ctx).map_err(value_err)?;
    Ok((
        trace.pair.0.elements().to_vec(),
        trace.pair.1.elements().to_vec(),
    ))
}

/// Index condition for two k-sets.
#[pyfunction]
fn bond(n: u32, k: u32, a: Vec<u32>, b: Vec<u32>) -> PyResult<bool> {
    let ctx = context(n, k)?;
    let a = kset(a, &ctx)?;
    let b = kset(b, &ctx)?;
    intersect::bond_condition(&a, &b).map_err(value_err)
}

/// Pairwise-intersecting check of a family.
#[pyfunction]
fn is_intersecting(n: u32, k: u32, members: Vec<Vec<u32>>) -> PyResult<bool> {
    let f = family(n, k, members)?;
    intersect::is_intersecting_family(&f).map_err(value_err)
}

/// Down-closure definition of left-compressed.
#[pyfunction]
fn is_left_compressed(n: u32, k: u32, members: Vec<Vec<u32>>) -> PyResult<bool> {
    Ok(sets::is_left_compressed_downclosed(&family(n, k, members)?))
}

/// Shift-stability definition of left-compressed.
#[pyfunction]
fn is_shift_stable(n: u32, k: u32, members: Vec<Vec<u32>>) -> PyResult<bool> {
    Ok(sets::is_left_compressed_shiftstable(&family(
        n, k, members,
    )?))
}

/// One (i, j)-shift of a family.
#[pyfunction]
fn ij_shift(n: u32, k: u32, members: Vec<Vec<u32>>, i: u32, j: u32) -> PyResult<Vec<Vec<u32>>> {
    let f = family(n, k, members)?;
    shift::ij_shift(&f, i, j)
        .map(|out| family_out(&out))
        .map_err(value_err)
}

/// Left-compressed fixed point plus the applied shifts as (i, j, moved)
/// triples.
#[pyfunction]
fn compress(
    n: u32,
    k: u32,
    members: Vec<Vec<u32>>,
) -> PyResult<(Vec<Vec<u32>>, Vec<(u32, u32, usize)>)> {
    let f = family(n, k, members)?;
    let (fixed, report) = shift::compress(&f);
    let applied = report
        .applied
        .iter()
        .map(|s| (s.i, s.j, s.moved))
        .collect();
    Ok((family_out(&fixed), applied))
}

/// A named reference family: "star", "a23" or "hm".
#[pyfunction]
fn named_family(n: u32, k: u32, name: &str) -> PyResult<Vec<Vec<u32>>> {
    let ctx = context(n, k)?;
    let which = mlcif::NamedFamily::parse(name)
        .ok_or_else(|| PyValueError::new_err(format!("unknown family name '{name}'")))?;
    Ok(family_out(&mlcif::named_family(which, &ctx)))
}

/// (is_maximal, blocker) for an intersecting family.
#[pyfunction]
fn is_maximal_intersecting(
    n: u32,
    k: u32,
    members: Vec<Vec<u32>>,
) -> PyResult<(bool, Option<Vec<u32>>)> {
    let f = family(n, k, members)?;
    let verdict = mlcif::is_maximal_intersecting(&f).map_err(value_err)?;
    Ok((
        verdict.is_maximal,
        verdict.blocker.map(|b| b.elements().to_vec()),
    ))
}

/// Whether the generator sits inside its [k + len - 1] window.
#[pyfunction]
fn has_full_type(n: u32, k: u32, g: Vec<u32>) -> PyResult<bool> {
    let ctx = context(n, k)?;
    let g = generator(g, &ctx)?;
    Ok(mlcif::has_full_type(&g, &ctx))
}

/// Closure-greedy extension of a left-compressed intersecting family.
#[pyfunction]
fn greedy_extend(n: u32, k: u32, members: Vec<Vec<u32>>) -> PyResult<Vec<Vec<u32>>> {
    let f = family(n, k, members)?;
    mlcif::greedy_extend(&f)
        .map(|out| family_out(&out))
        .map_err(value_err)
}

/// Every maximal left-compressed intersecting family of the context, as
/// (family, generators) pairs.
#[pyfunction]
#[pyo3(signature = (n, k, budget = mlcif::DEFAULT_ENUMERATION_BUDGET))]
fn enumerate_mlcif(
    n: u32,
    k: u32,
    budget: usize,
) -> PyResult<Vec<(Vec<Vec<u32>>, Vec<Vec<u32>>)>> {
    let ctx = context(n, k)?;
    let catalogue = mlcif::enumerate_mlcif(&ctx, budget).map_err(value_err)?;
    Ok(catalogue
        .entries
        .iter()
        .map(|e| (family_out(&e.family), collection_out(&e.generators)))
        .collect())
}

/// Parse document text into (n, k, tag, sets) with tag "G" or "S".
#[pyfunction]
fn parse_document(text: &str) -> PyResult<(u32, u32, String, Vec<Vec<u32>>)> {
    let doc = parse_doc(text).map_err(value_err)?;
    let ctx = doc.context();
    let (tag, sets) = match doc.payload() {
        Payload::Generators(gc) => ("G".to_string(), collection_out(gc)),
        Payload::Family(f) => ("S".to_string(), family_out(f)),
    };
    Ok((ctx.n(), ctx.k(), tag, sets))
}

/// Render (n, k, tag, sets) back into document text.
#[pyfunction]
fn format_document(n: u32, k: u32, tag: &str, sets: Vec<Vec<u32>>) -> PyResult<String> {
    let doc = match tag {
        "G" => InputDocument::generators(collection(n, k, sets)?),
        "S" => InputDocument::family(family(n, k, sets)?),
        other => return Err(PyValueError::new_err(format!("tag must be G or S, got '{other}'"))),
    };
    Ok(doc.to_string())
}

#[pymodule]
fn lcif(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_function(wrap_pyfunction!(mu, m)?)?;
    m.add_function(wrap_pyfunction!(leq, m)?)?;
    m.add_function(wrap_pyfunction!(preceq, m)?)?;
    m.add_function(wrap_pyfunction!(lower_closure, m)?)?;
    m.add_function(wrap_pyfunction!(build_family, m)?)?;
    m.add_function(wrap_pyfunction!(extract_generators, m)?)?;
    m.add_function(wrap_pyfunction!(generator_type, m)?)?;
    m.add_function(wrap_pyfunction!(pi_collection, m)?)?;
    m.add_function(wrap_pyfunction!(criterion_level, m)?)?;
    m.add_function(wrap_pyfunction!(strongly_intersecting, m)?)?;
    m.add_function(wrap_pyfunction!(check_generators, m)?)?;
    m.add_function(wrap_pyfunction!(witness_pair, m)?)?;
    m.add_function(wrap_pyfunction!(bond, m)?)?;
    m.add_function(wrap_pyfunction!(is_intersecting, m)?)?;
    m.add_function(wrap_pyfunction!(is_left_compressed, m)?)?;
    m.add_function(wrap_pyfunction!(is_shift_stable, m)?)?;
    m.add_function(wrap_pyfunction!(ij_shift, m)?)?;
    m.add_function(wrap_pyfunction!(compress, m)?)?;
    m.add_function(wrap_pyfunction!(named_family, m)?)?;
    m.add_function(wrap_pyfunction!(is_maximal_intersecting, m)?)?;
    m.add_function(wrap_pyfunction!(has_full_type, m)?)?;
    m.add_function(wrap_pyfunction!(greedy_extend, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_mlcif, m)?)?;
    m.add_function(wrap_pyfunction!(parse_document, m)?)?;
    m.add_function(wrap_pyfunction!(format_document, m)?)?;
    Ok(())
}
