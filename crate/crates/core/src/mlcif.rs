//! Maximal left-compressed intersecting families: the named reference
//! families, maximality testing with blockers, greedy closure extension,
//! the full-type condition on generators, and exhaustive enumeration at
//! desk scale.

use crate::error::{Error, Result};
use crate::generators::{extract_generators, pi_collection};
use crate::intersect::{intersecting_violation, is_intersecting_family};
use crate::sets::{
    is_left_compressed_downclosed, left_compressed_violation, lower_closure, GeneratorCollection,
    GeneratorSet, GroundContext, KSet, SetFamily,
};

/// Default cap on the number of k-sets the clique enumeration will touch.
pub const DEFAULT_ENUMERATION_BUDGET: usize = 40;

/// The catalogued reference families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedFamily {
    /// All k-sets containing element 1.
    Star,
    /// All k-sets meeting {1,2,3} in at least two elements.
    A23,
    /// Star members meeting [2, k+1], plus the set [2, k+1] itself.
    HiltonMilner,
}

impl NamedFamily {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "star" => Some(Self::Star),
            "a23" => Some(Self::A23),
            "hm" => Some(Self::HiltonMilner),
            _ => None,
        }
    }
}

/// Builds a named family by direct membership test over all k-subsets.
/// The generator presentations (star = F({1}), a23 = F({2,3}),
/// hm = F({1,k+1}, [2,k+1])) are verified against these membership
/// definitions in the test suite.
pub fn named_family(name: NamedFamily, ctx: &GroundContext) -> SetFamily {
    let k = ctx.k();
    let members: Vec<KSet> = ctx
        .ksets()
        .into_iter()
        .filter(|s| match name {
            NamedFamily::Star => s.contains(1),
            NamedFamily::A23 => s.elements().iter().filter(|&&e| e <= 3).count() >= 2,
            NamedFamily::HiltonMilner => {
                let meets_window = s.elements().iter().any(|&e| 2 <= e && e <= k + 1);
                let is_window = s
                    .elements()
                    .iter()
                    .enumerate()
                    .all(|(i, &e)| e == i as u32 + 2);
                (s.contains(1) && meets_window) || is_window
            }
        })
        .collect();
    SetFamily::from_sorted_unique(*ctx, members)
}

/// Maximality verdict for an intersecting family; when not maximal, the
/// blocker is the lexicographically first addable k-set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalityVerdict {
    pub is_maximal: bool,
    pub blocker: Option<KSet>,
}

/// Whether no k-set outside the family meets every member. Errors (with
/// the disjoint pair) when the family is not intersecting to begin with.
pub fn is_maximal_intersecting(f: &SetFamily) -> Result<MaximalityVerdict> {
    if let Some((left, right)) = intersecting_violation(f)? {
        return Err(Error::NotIntersecting { left, right });
    }
    for c in f.context().ksets() {
        if !f.contains(&c) && f.members().iter().all(|m| m.intersects(&c)) {
            return Ok(MaximalityVerdict {
                is_maximal: false,
                blocker: Some(c),
            });
        }
    }
    Ok(MaximalityVerdict {
        is_maximal: true,
        blocker: None,
    })
}

/// Whether the generator lies inside [k + |G| - 1], i.e. its type equals
/// its size and truncation leaves it unchanged. Necessary for the
/// generators of a maximal left-compressed intersecting family; whether it
/// is sufficient is open.
pub fn has_full_type(g: &GeneratorSet, ctx: &GroundContext) -> bool {
    *g.elements().last().unwrap() < ctx.k() + g.len() as u32
}

/// Extends a left-compressed intersecting family by sweeping candidate
/// k-sets in colexicographic order and absorbing each whole closure that
/// keeps the family intersecting. Adding closures rather than single sets
/// preserves left-compression at every step, and colex visits every
/// closure before anything that dominates it.
///
/// The result admits no further closure. Whether it is maximal
/// *intersecting* is reported separately by `is_maximal_intersecting`,
/// never assumed: candidate order may matter and different orders may
/// reach different families.
pub fn greedy_extend(f: &SetFamily) -> Result<SetFamily> {
    if let Some((member, missing)) = left_compressed_violation(f) {
        return Err(Error::NotLeftCompressed { member, missing });
    }
    if let Some((left, right)) = intersecting_violation(f)? {
        return Err(Error::NotIntersecting { left, right });
    }
    let ctx = f.context();
    let mut cur = f.clone();
    for c in ctx.ksets_colex() {
        if cur.contains(&c) {
            continue;
        }
        let candidate = cur
            .union(&lower_closure(&c, &ctx))
            .expect("closure shares the family context");
        if is_intersecting_family(&candidate)? {
            cur = candidate;
        }
    }
    Ok(cur)
}

/// One catalogue entry: the family and its generator antichain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogueEntry {
    pub family: SetFamily,
    pub generators: GeneratorCollection,
}

/// All maximal left-compressed intersecting families of a context, in
/// deterministic order (lexicographic on the generator collections).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MlcifCatalogue {
    pub context: GroundContext,
    pub entries: Vec<CatalogueEntry>,
}

/// Enumerates every maximal intersecting family as a maximal clique of
/// the intersection graph on all k-sets (pivoting Bron-Kerbosch over a
/// degeneracy ordering), then keeps the left-compressed ones with their
/// extracted generators. Refuses when C(n, k) exceeds the budget.
pub fn enumerate_mlcif(ctx: &GroundContext, budget: usize) -> Result<MlcifCatalogue> {
    let vertices = ctx.ksets();
    if vertices.len() > budget {
        return Err(Error::BudgetExceeded {
            vertices: vertices.len(),
            budget,
        });
    }
    let nv = vertices.len();
    let mut adj = vec![Mask::empty(nv); nv];
    for a in 0..nv {
        for b in (a + 1)..nv {
            if vertices[a].intersects(&vertices[b]) {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
    }

    let order = degeneracy_order(&adj, nv);
    let mut pos = vec![0usize; nv];
    for (idx, &v) in order.iter().enumerate() {
        pos[v] = idx;
    }

    let mut cliques: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        let mut p = Mask::empty(nv);
        let mut x = Mask::empty(nv);
        for u in adj[v].ones() {
            if pos[u] > pos[v] {
                p.insert(u);
            } else {
                x.insert(u);
            }
        }
        let mut r = vec![v];
        bron_kerbosch_pivot(&adj, &mut r, p, x, &mut cliques);
    }
    cliques.sort();
    cliques.dedup();

    let mut entries = Vec::new();
    for clique in cliques {
        let members: Vec<KSet> = clique.iter().map(|&i| vertices[i].clone()).collect();
        let family = SetFamily::from_members_dedup(*ctx, members);
        if !is_left_compressed_downclosed(&family) {
            continue;
        }
        // canonical antichain: truncate the maximal sets to their type
        // prefixes. The truncated generators span an intersecting family
        // containing this one, so maximality forces equality, and every
        // truncated generator sits inside its [k + |G| - 1] window.
        let maxima = extract_generators(&family).expect("catalogue families are left-compressed");
        let generators = pi_collection(&maxima)
            .expect("members of an intersecting down-closed family start at or below k");
        entries.push(CatalogueEntry { family, generators });
    }
    entries.sort_by(|a, b| a.generators.generators().cmp(b.generators.generators()));
    Ok(MlcifCatalogue {
        context: *ctx,
        entries,
    })
}

/// Grow-from-smallest-degree elimination order; restricting the search to
/// neighbours later in this order keeps the recursion shallow on the dense
/// intersection graphs that show up here.
fn degeneracy_order(adj: &[Mask], nv: usize) -> Vec<usize> {
    let mut remaining = vec![true; nv];
    let mut degree: Vec<usize> = adj.iter().map(Mask::count).collect();
    let mut order = Vec::with_capacity(nv);
    for _ in 0..nv {
        let v = (0..nv)
            .filter(|&v| remaining[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("vertices remain");
        order.push(v);
        remaining[v] = false;
        for u in adj[v].ones() {
            if remaining[u] {
                degree[u] -= 1;
            }
        }
    }
    order
}

fn bron_kerbosch_pivot(
    adj: &[Mask],
    r: &mut Vec<usize>,
    mut p: Mask,
    mut x: Mask,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        let mut clique = r.clone();
        clique.sort_unstable();
        out.push(clique);
        return;
    }
    // pivot: member of P u X with the most neighbours in P; smallest index
    // wins ties so the traversal is deterministic
    let mut pivot = None;
    let mut best = 0usize;
    for u in p.or(&x).ones() {
        let count = p.and_count(&adj[u]);
        if pivot.is_none() || count > best {
            pivot = Some(u);
            best = count;
        }
    }
    let pivot = pivot.expect("P u X is nonempty");
    for v in p.and_not(&adj[pivot]).ones() {
        r.push(v);
        bron_kerbosch_pivot(adj, r, p.and(&adj[v]), x.and(&adj[v]), out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// Fixed-width bitset over vertex indices; word count is set once at
/// construction and shared by all masks of one enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Mask {
    words: Vec<u64>,
}

impl Mask {
    fn empty(bits: usize) -> Self {
        Self {
            words: vec![0; bits.div_ceil(64)],
        }
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn and(&self, other: &Mask) -> Mask {
        Mask {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn and_not(&self, other: &Mask) -> Mask {
        Mask {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    fn or(&self, other: &Mask) -> Mask {
        Mask {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    fn and_count(&self, other: &Mask) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn ones(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &word) in self.words.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                let bit = w.trailing_zeros() as usize;
                out.push(wi * 64 + bit);
                w &= w - 1;
            }
        }
        out
    }
}
