//! Families generated by collections of generating sets, generator
//! extraction from left-compressed families, and type truncation.
//!
//! A generator G induces the family of all k-sets S with S preceq G; a
//! collection induces the union. Generated families are always
//! down-closed, whether or not they are intersecting.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::sets::{
    left_compressed_violation, maximal_sets, preceq, GeneratorCollection, GeneratorSet,
    GroundContext, KSet, SetFamily,
};

/// All k-sets dominated by some generator of the collection, merged and
/// deduplicated in lexicographic order.
///
/// Enumeration recurses position by position: while inside the generator's
/// length the element is capped by the generator bound, afterwards only by
/// n. This prunes instead of filtering all C(n, k) candidates per
/// generator.
pub fn build_family(gc: &GeneratorCollection) -> SetFamily {
    let ctx = gc.context();
    let mut acc: BTreeSet<Vec<u32>> = BTreeSet::new();
    for g in gc.generators() {
        let mut cur = Vec::with_capacity(ctx.k() as usize);
        enumerate_generated(g.elements(), &ctx, &mut cur, &mut acc);
    }
    let members = acc.into_iter().map(KSet::from_raw).collect();
    SetFamily::from_sorted_unique(ctx, members)
}

fn enumerate_generated(
    bounds: &[u32],
    ctx: &GroundContext,
    cur: &mut Vec<u32>,
    out: &mut BTreeSet<Vec<u32>>,
) {
    let k = ctx.k() as usize;
    if cur.len() == k {
        out.insert(cur.clone());
        return;
    }
    let idx = cur.len();
    let lo = cur.last().map_or(1, |&e| e + 1);
    let tail_cap = ctx.n() - (k - idx - 1) as u32;
    let hi = if idx < bounds.len() {
        bounds[idx].min(tail_cap)
    } else {
        tail_cap
    };
    for e in lo..=hi {
        cur.push(e);
        enumerate_generated(bounds, ctx, cur, out);
        cur.pop();
    }
}

/// The maximal sets of a left-compressed family, as k-set generators.
/// Rebuilding from the result reproduces the family exactly.
pub fn extract_generators(f: &SetFamily) -> Result<GeneratorCollection> {
    if f.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if let Some((member, missing)) = left_compressed_violation(f) {
        return Err(Error::NotLeftCompressed { member, missing });
    }
    let maxima = maximal_sets(f)?;
    let gens = maxima.members().iter().map(GeneratorSet::from_kset).collect();
    GeneratorCollection::new(f.context(), gens)
}

/// A generator with its type r (the largest index with g_r < k + r) and
/// the truncation to its first r elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypedGenerator {
    pub generator: GeneratorSet,
    pub type_index: usize,
    pub truncation: GeneratorSet,
}

/// Computes the type and truncation. A generator whose smallest element
/// exceeds k cannot belong to any intersecting family's collection, so it
/// is rejected rather than defaulted.
pub fn type_of(g: &GeneratorSet, ctx: &GroundContext) -> Result<TypedGenerator> {
    let k = ctx.k();
    let elems = g.elements();
    if elems[0] > k {
        return Err(Error::IncompatibleGenerator {
            generator: g.clone(),
        });
    }
    // once g_t >= k + t every later index fails too, so the qualifying
    // indices form a prefix; scan for the last one anyway
    let mut r = 0;
    for (i, &e) in elems.iter().enumerate() {
        if e < k + (i as u32 + 1) {
            r = i + 1;
        }
    }
    debug_assert!(r >= 1);
    let truncation = GeneratorSet::new(elems[..r].to_vec(), ctx)?;
    Ok(TypedGenerator {
        generator: g.clone(),
        type_index: r,
        truncation,
    })
}

/// Truncates every generator to its type prefix, then deduplicates and
/// prunes dominated generators. Pruning does not change the generated
/// family, and the result is idempotent under repeated truncation.
pub fn pi_collection(gc: &GeneratorCollection) -> Result<GeneratorCollection> {
    let ctx = gc.context();
    let mut truncated = Vec::with_capacity(gc.len());
    for g in gc.generators() {
        truncated.push(type_of(g, &ctx)?.truncation);
    }
    Ok(prune_dominated(&GeneratorCollection::from_dedup(
        ctx, truncated,
    )))
}

/// Keeps only generators not dominated (preceq) by another one; a
/// dominated generator is redundant because its family is contained in
/// the dominating generator's family.
pub fn prune_dominated(gc: &GeneratorCollection) -> GeneratorCollection {
    let gens = gc.generators();
    let kept: Vec<GeneratorSet> = gens
        .iter()
        .filter(|g| {
            !gens
                .iter()
                .any(|h| h != *g && preceq(g.elements(), h.elements()))
        })
        .cloned()
        .collect();
    GeneratorCollection::from_dedup(gc.context(), kept)
}
