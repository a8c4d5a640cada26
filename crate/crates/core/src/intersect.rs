//! The strong-intersection decision core: the prefix-count criterion, the
//! exhaustive oracle used as independent ground truth, the constructive
//! builder of disjoint witness pairs, and the index condition for k-sets.
//!
//! Two sets G and H are *strongly intersecting* when every pair dominated
//! by them (G' componentwise <= G, H' componentwise <= H) intersects. The
//! criterion decides this by scanning levels: G and H are strongly
//! intersecting exactly when some level l has mu_G(l) + mu_H(l) > l.

use crate::error::{Error, Result};
use crate::sets::{
    count_upto, dominated_sequences, slices_intersect, GeneratorCollection, GeneratorSet,
    GroundContext, KSet, SetFamily,
};

/// Result of the criterion scan. When the criterion holds, `level` is the
/// smallest witnessing level; minimality is part of the contract so output
/// is deterministic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CriterionVerdict {
    pub holds: bool,
    pub level: Option<u32>,
}

/// Scans levels 1..=max(G u H) for mu_G(l) + mu_H(l) > l. Both counts are
/// constant beyond the largest element while the right-hand side keeps
/// growing, so later levels can never witness. Inputs are strictly
/// ascending and nonempty; G = H is allowed.
pub fn criterion(g: &[u32], h: &[u32]) -> CriterionVerdict {
    let m = g.last().copied().unwrap_or(0).max(h.last().copied().unwrap_or(0));
    for level in 1..=m {
        if count_upto(g, level) + count_upto(h, level) > level as usize {
            return CriterionVerdict {
                holds: true,
                level: Some(level),
            };
        }
    }
    CriterionVerdict {
        holds: false,
        level: None,
    }
}

/// Exhaustive ground truth for the criterion: enumerate every dominated
/// pair and demand a common element. Kept deliberately independent of the
/// level scan.
pub fn strongly_intersecting_oracle(g: &[u32], h: &[u32]) -> bool {
    oracle_witness(g, h).is_none()
}

/// The first disjoint dominated pair in (G', H') lexicographic order, if
/// any.
pub fn oracle_witness(g: &[u32], h: &[u32]) -> Option<(Vec<u32>, Vec<u32>)> {
    let hs = dominated_sequences(h);
    for gp in dominated_sequences(g) {
        for hp in &hs {
            if !slices_intersect(&gp, hp) {
                return Some((gp, hp.clone()));
            }
        }
    }
    None
}

/// One checked generator pair: indices into the collection plus the
/// smallest witnessing level (absent when the pair fails).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairCheck {
    pub left: usize,
    pub right: usize,
    pub level: Option<u32>,
}

/// The first failing pair together with its disjoint-witness trace.
#[derive(Debug, Clone)]
pub struct CollectionFailure {
    pub left: usize,
    pub right: usize,
    pub trace: WitnessTrace,
}

#[derive(Debug, Clone)]
pub struct CollectionReport {
    pub pairs: Vec<PairCheck>,
    pub failure: Option<CollectionFailure>,
}

impl CollectionReport {
    pub fn passes(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks every unordered pair of generators, each generator also against
/// itself. The scan runs in lexicographic pair order (the collection is
/// already sorted) and stops at the first failure, attaching the
/// constructive witness for that pair.
pub fn check_collection(gc: &GeneratorCollection) -> Result<CollectionReport> {
    if gc.is_empty() {
        return Err(Error::EmptyCollection);
    }
    let ctx = gc.context();
    let gens = gc.generators();
    let mut pairs = Vec::new();
    for i in 0..gens.len() {
        for j in i..gens.len() {
            let verdict = criterion(gens[i].elements(), gens[j].elements());
            pairs.push(PairCheck {
                left: i,
                right: j,
                level: verdict.level,
            });
            if !verdict.holds {
                let trace = witness_construct(&gens[i], &gens[j], &ctx)?;
                return Ok(CollectionReport {
                    pairs,
                    failure: Some(CollectionFailure {
                        left: i,
                        right: j,
                        trace,
                    }),
                });
            }
        }
    }
    Ok(CollectionReport {
        pairs,
        failure: None,
    })
}

/// Snapshot of the inductive construction after processing a level:
/// `g_part`/`h_part` are the disjoint sets built so far (componentwise
/// below G n [level] and H n [level]) and together they fill exactly
/// [total].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelRecord {
    pub level: u32,
    pub g_count: usize,
    pub h_count: usize,
    pub total: usize,
    pub g_part: Vec<u32>,
    pub h_part: Vec<u32>,
}

/// The full certificate that a generator pair is not strongly
/// intersecting: the per-level construction plus the final disjoint k-set
/// pair dominated by G and H respectively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessTrace {
    pub levels: Vec<LevelRecord>,
    pub max_element: u32,
    pub pair: (KSet, KSet),
}

/// Builds the disjoint witness pair for a pair on which the criterion
/// fails.
///
/// Walking levels 1..=m (m the largest element of G u H): a level in
/// exactly one of the sets appends the next unused value to that side; a
/// level in both appends the next two values, smaller to the G side. The
/// failure hypothesis keeps the filled prefix no longer than the level, so
/// domination is preserved. Both sides are then padded to k elements from
/// [total+1, n], the G side taking the smallest values; 2k <= n guarantees
/// room. Padding sits above everything built, so the first |G| elements of
/// A stay componentwise below G (and likewise for B).
pub fn witness_construct(
    g: &GeneratorSet,
    h: &GeneratorSet,
    ctx: &GroundContext,
) -> Result<WitnessTrace> {
    if let Some(level) = criterion(g.elements(), h.elements()).level {
        return Err(Error::CriterionHolds { level });
    }
    let k = ctx.k() as usize;
    let n = ctx.n() as usize;
    let m = g
        .elements()
        .last()
        .copied()
        .unwrap()
        .max(h.elements().last().copied().unwrap());

    let mut g_part: Vec<u32> = Vec::with_capacity(g.len());
    let mut h_part: Vec<u32> = Vec::with_capacity(h.len());
    let mut total = 0usize;
    let mut levels = Vec::with_capacity(m as usize);
    for level in 1..=m {
        match (g.contains(level), h.contains(level)) {
            (true, true) => {
                g_part.push((total + 1) as u32);
                h_part.push((total + 2) as u32);
                total += 2;
            }
            (true, false) => {
                g_part.push((total + 1) as u32);
                total += 1;
            }
            (false, true) => {
                h_part.push((total + 1) as u32);
                total += 1;
            }
            (false, false) => {}
        }
        debug_assert!(total <= level as usize);
        levels.push(LevelRecord {
            level,
            g_count: g_part.len(),
            h_count: h_part.len(),
            total,
            g_part: g_part.clone(),
            h_part: h_part.clone(),
        });
    }
    debug_assert_eq!(g_part.len(), g.len());
    debug_assert_eq!(h_part.len(), h.len());

    let needed = (k - g.len()) + (k - h.len());
    if needed > n - total {
        return Err(Error::NoPaddingRoom {
            needed,
            available: n - total,
        });
    }
    let mut a = g_part;
    a.extend(((total + 1)..=(total + (k - g.len()))).map(|e| e as u32));
    let mut b = h_part;
    let j_start = total + (k - g.len()) + 1;
    b.extend((j_start..j_start + (k - h.len())).map(|e| e as u32));
    let pair = (KSet::new(a, ctx)?, KSet::new(b, ctx)?);
    Ok(WitnessTrace {
        levels,
        max_element: m,
        pair,
    })
}

/// Every member of `f1` meets every member of `f2`; quadratic scan.
pub fn cross_intersecting_oracle(f1: &SetFamily, f2: &SetFamily) -> Result<bool> {
    if f1.context() != f2.context() {
        return Err(Error::ContextMismatch);
    }
    Ok(f1
        .members()
        .iter()
        .all(|a| f2.members().iter().all(|b| a.intersects(b))))
}

/// Every two members share an element (self-pairs trivially do).
pub fn is_intersecting_family(f: &SetFamily) -> Result<bool> {
    Ok(intersecting_violation(f)?.is_none())
}

/// The lexicographically first disjoint member pair, if any.
pub fn intersecting_violation(f: &SetFamily) -> Result<Option<(KSet, KSet)>> {
    if f.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let members = f.members();
    for i in 0..members.len() {
        for j in (i + 1)..members.len() {
            if !members[i].intersects(&members[j]) {
                return Ok(Some((members[i].clone(), members[j].clone())));
            }
        }
    }
    Ok(None)
}

/// Index condition on two k-sets: some pair 1 <= i, j <= k has
/// i + j > max(a_i, b_j). Strict inequality is the form that agrees with
/// the exhaustive oracle; the non-strict variant already fails on the
/// ({2,4},{2,4}) self-pair.
pub fn bond_condition(a: &KSet, b: &KSet) -> Result<bool> {
    Ok(bond_indices(a, b)?.is_some())
}

/// The first (i, j) satisfying the index condition, scanning i then j.
pub fn bond_indices(a: &KSet, b: &KSet) -> Result<Option<(usize, usize)>> {
    let (ae, be) = (a.elements(), b.elements());
    if ae.len() != be.len() {
        return Err(Error::SizeMismatch {
            left: ae.len(),
            right: be.len(),
        });
    }
    for i in 1..=ae.len() {
        for j in 1..=be.len() {
            if i + j > ae[i - 1].max(be[j - 1]) as usize {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::build_family;
    use crate::sets::{leq, preceq, GeneratorCollection};

    fn ctx(n: u32, k: u32) -> GroundContext {
        GroundContext::new(n, k).unwrap()
    }

    fn gen(elems: &[u32], c: &GroundContext) -> GeneratorSet {
        GeneratorSet::new(elems.to_vec(), c).unwrap()
    }

    fn collection(gens: &[&[u32]], c: &GroundContext) -> GeneratorCollection {
        GeneratorCollection::new(*c, gens.iter().map(|g| gen(g, c)).collect()).unwrap()
    }

    #[test]
    fn criterion_examples() {
        // {2,3} against itself: 2 + 2 > 3 at the third level
        assert_eq!(criterion(&[2, 3], &[2, 3]).level, Some(3));
        // {2,4} against itself: sums 0, 2, 2, 4 never beat the level
        assert_eq!(
            criterion(&[2, 4], &[2, 4]),
            CriterionVerdict {
                holds: false,
                level: None
            }
        );
        // sums 0, 2, 3, 4, 5 at levels 1..=5
        assert!(!criterion(&[2, 3], &[2, 4, 5]).holds);
        // two stars share element 1
        assert_eq!(criterion(&[1], &[1]).level, Some(1));
    }

    #[test]
    fn criterion_reports_smallest_level() {
        assert_eq!(criterion(&[1, 3], &[2, 3, 5]).level, Some(3));
        assert_eq!(criterion(&[2, 3, 5], &[1, 3]).level, Some(3));
        assert_eq!(criterion(&[1, 4, 5], &[2, 3, 5]).level, Some(5));
        assert_eq!(criterion(&[1, 3], &[1, 4, 5]).level, Some(1));
    }

    #[test]
    fn oracle_examples() {
        assert!(strongly_intersecting_oracle(&[2, 3], &[2, 3]));
        assert!(!strongly_intersecting_oracle(&[2, 4], &[2, 4]));
        assert_eq!(
            oracle_witness(&[2, 4], &[2, 4]),
            Some((vec![1, 3], vec![2, 4]))
        );
        assert!(strongly_intersecting_oracle(&[1, 3], &[2, 3, 5]));
    }

    #[test]
    fn oracle_matches_criterion_on_small_sweep() {
        // quick sanity version of the full acceptance sweep
        let mut subsets: Vec<Vec<u32>> = Vec::new();
        for a in 1..=5u32 {
            subsets.push(vec![a]);
            for b in (a + 1)..=5 {
                subsets.push(vec![a, b]);
            }
        }
        for g in &subsets {
            for h in &subsets {
                assert_eq!(
                    criterion(g, h).holds,
                    strongly_intersecting_oracle(g, h),
                    "disagree on {g:?} vs {h:?}"
                );
            }
        }
    }

    #[test]
    fn monotone_scan_soundness() {
        // when the criterion holds at level l, every dominated pair beats
        // the same level
        let pairs: [(&[u32], &[u32]); 3] = [(&[2, 3], &[2, 3]), (&[1, 3], &[2, 3, 5]), (&[2, 3, 5], &[2, 3, 5])];
        for (g, h) in pairs {
            let level = criterion(g, h).level.unwrap();
            for gp in dominated_sequences(g) {
                for hp in dominated_sequences(h) {
                    assert!(count_upto(&gp, level) + count_upto(&hp, level) > level as usize);
                }
            }
        }
    }

    #[test]
    fn check_collection_examples() {
        let c = ctx(10, 3);
        let good = collection(&[&[1, 3], &[1, 4, 5], &[2, 3, 5]], &c);
        let report = check_collection(&good).unwrap();
        assert!(report.passes());
        assert_eq!(report.pairs.len(), 6);

        let bad = collection(&[&[2, 3], &[2, 4, 5]], &c);
        let report = check_collection(&bad).unwrap();
        let failure = report.failure.unwrap();
        assert_eq!((failure.left, failure.right), (0, 1));

        let star = collection(&[&[1]], &c);
        assert!(check_collection(&star).unwrap().passes());

        let empty = GeneratorCollection::new(c, vec![]).unwrap();
        assert_eq!(check_collection(&empty).unwrap_err(), Error::EmptyCollection);
    }

    #[test]
    fn witness_construct_24_pair() {
        let c = ctx(10, 2);
        let g = gen(&[2, 4], &c);
        let trace = witness_construct(&g, &g, &c).unwrap();
        assert_eq!(trace.max_element, 4);
        let last = trace.levels.last().unwrap();
        assert_eq!(last.g_part, vec![1, 3]);
        assert_eq!(last.h_part, vec![2, 4]);
        assert_eq!(trace.pair.0.elements(), &[1, 3]);
        assert_eq!(trace.pair.1.elements(), &[2, 4]);
    }

    #[test]
    fn witness_construct_pads_above_filled_prefix() {
        let c = ctx(6, 3);
        let g = gen(&[6], &c);
        let trace = witness_construct(&g, &g, &c).unwrap();
        let last = trace.levels.last().unwrap();
        assert_eq!(last.g_part, vec![1]);
        assert_eq!(last.h_part, vec![2]);
        assert_eq!(trace.pair.0.elements(), &[1, 3, 4]);
        assert_eq!(trace.pair.1.elements(), &[2, 5, 6]);
    }

    #[test]
    fn witness_construct_mixed_pair() {
        let c = ctx(10, 3);
        let g = gen(&[2, 3], &c);
        let h = gen(&[2, 4, 5], &c);
        let trace = witness_construct(&g, &h, &c).unwrap();
        let totals: Vec<usize> = trace.levels.iter().map(|r| r.total).collect();
        assert_eq!(totals, vec![0, 2, 3, 4, 5]);
        let last = trace.levels.last().unwrap();
        assert_eq!(last.g_part, vec![1, 3]);
        assert_eq!(last.h_part, vec![2, 4, 5]);
        assert_eq!(trace.pair.0.elements(), &[1, 3, 6]);
        assert_eq!(trace.pair.1.elements(), &[2, 4, 5]);
        assert!(!trace.pair.0.intersects(&trace.pair.1));
        assert!(preceq(trace.pair.0.elements(), g.elements()));
        assert!(preceq(trace.pair.1.elements(), h.elements()));
    }

    #[test]
    fn witness_construct_rejects_holding_pairs() {
        let c = ctx(10, 2);
        let g = gen(&[2, 3], &c);
        assert_eq!(
            witness_construct(&g, &g, &c).unwrap_err(),
            Error::CriterionHolds { level: 3 }
        );
    }

    #[test]
    fn witness_trace_levels_satisfy_construction_invariants() {
        let c = ctx(12, 3);
        let g = gen(&[2, 4], &c);
        let h = gen(&[3, 4, 6], &c);
        assert!(!criterion(g.elements(), h.elements()).holds);
        let trace = witness_construct(&g, &h, &c).unwrap();
        let mut prev_total = 0;
        for rec in &trace.levels {
            let g_prefix: Vec<u32> = g
                .elements()
                .iter()
                .copied()
                .filter(|&e| e <= rec.level)
                .collect();
            let h_prefix: Vec<u32> = h
                .elements()
                .iter()
                .copied()
                .filter(|&e| e <= rec.level)
                .collect();
            assert!(leq(&rec.g_part, &g_prefix).unwrap());
            assert!(leq(&rec.h_part, &h_prefix).unwrap());
            assert!(!slices_intersect(&rec.g_part, &rec.h_part));
            let mut union: Vec<u32> = rec.g_part.iter().chain(&rec.h_part).copied().collect();
            union.sort_unstable();
            let expected: Vec<u32> = (1..=rec.total as u32).collect();
            assert_eq!(union, expected);
            assert_eq!(rec.g_count + rec.h_count, rec.total);
            assert!(rec.total - prev_total <= 2);
            prev_total = rec.total;
        }
    }

    #[test]
    fn cross_intersecting_examples() {
        let c = ctx(10, 3);
        let f23 = build_family(&collection(&[&[2, 3]], &c));
        let f245 = build_family(&collection(&[&[2, 4, 5]], &c));
        assert!(cross_intersecting_oracle(&f23, &f23).unwrap());
        assert!(!cross_intersecting_oracle(&f23, &f245).unwrap());
        let star = build_family(&collection(&[&[1]], &c));
        assert!(cross_intersecting_oracle(&star, &star).unwrap());
    }

    #[test]
    fn is_intersecting_examples() {
        let c = ctx(5, 2);
        let triangle = SetFamily::new(
            c,
            vec![
                KSet::new(vec![1, 2], &c).unwrap(),
                KSet::new(vec![1, 3], &c).unwrap(),
                KSet::new(vec![2, 3], &c).unwrap(),
            ],
        )
        .unwrap();
        assert!(is_intersecting_family(&triangle).unwrap());

        let split = SetFamily::new(
            c,
            vec![
                KSet::new(vec![1, 2], &c).unwrap(),
                KSet::new(vec![3, 4], &c).unwrap(),
            ],
        )
        .unwrap();
        assert!(!is_intersecting_family(&split).unwrap());
        let (a, b) = intersecting_violation(&split).unwrap().unwrap();
        assert_eq!(a.elements(), &[1, 2]);
        assert_eq!(b.elements(), &[3, 4]);

        let c10 = ctx(10, 3);
        let built = build_family(&collection(&[&[1, 3], &[1, 4, 5], &[2, 3, 5]], &c10));
        assert!(is_intersecting_family(&built).unwrap());
    }

    #[test]
    fn bond_examples() {
        let c = ctx(6, 3);
        let bottom = KSet::new(vec![1, 2, 3], &c).unwrap();
        assert!(bond_condition(&bottom, &bottom).unwrap());
        assert_eq!(bond_indices(&bottom, &bottom).unwrap(), Some((1, 1)));

        let c2 = ctx(5, 2);
        let s24 = KSet::new(vec![2, 4], &c2).unwrap();
        assert!(!bond_condition(&s24, &s24).unwrap());
        assert!(!strongly_intersecting_oracle(&[2, 4], &[2, 4]));

        let a = KSet::new(vec![1, 3], &c2).unwrap();
        let b = KSet::new(vec![2, 3], &c2).unwrap();
        assert!(bond_condition(&a, &b).unwrap());
        assert_eq!(bond_indices(&a, &b).unwrap(), Some((2, 2)));
        assert!(strongly_intersecting_oracle(&[1, 3], &[2, 3]));
    }

    #[test]
    fn collection_verdict_matches_brute_force_on_built_families() {
        // every 1- and 2-element collection over the nonempty subsets of
        // [5] with at most 3 elements, plus seeded larger collections
        let c = ctx(10, 3);
        let mut subsets: Vec<Vec<u32>> = Vec::new();
        for a in 1..=5u32 {
            subsets.push(vec![a]);
            for b in (a + 1)..=5 {
                subsets.push(vec![a, b]);
                for d in (b + 1)..=5 {
                    subsets.push(vec![a, b, d]);
                }
            }
        }
        assert_eq!(subsets.len(), 25);
        let mut collections: Vec<Vec<Vec<u32>>> = Vec::new();
        for (i, g) in subsets.iter().enumerate() {
            collections.push(vec![g.clone()]);
            for h in subsets.iter().skip(i + 1) {
                collections.push(vec![g.clone(), h.clone()]);
            }
        }
        for gens in &collections {
            let gc = GeneratorCollection::new(
                c,
                gens.iter().map(|g| gen(g, &c)).collect(),
            )
            .unwrap();
            let fast = check_collection(&gc).unwrap().passes();
            let brute = is_intersecting_family(&build_family(&gc)).unwrap();
            assert_eq!(fast, brute, "disagree on {gens:?}");
        }
        for seed in 0..10 {
            let gc = crate::sample::random_strongly_intersecting_collection(&c, 5, seed);
            assert!(check_collection(&gc).unwrap().passes());
            assert!(is_intersecting_family(&build_family(&gc)).unwrap());
        }
    }

    #[test]
    fn bond_size_mismatch() {
        let c2 = ctx(5, 2);
        let c3 = ctx(8, 3);
        let a = KSet::new(vec![1, 3], &c2).unwrap();
        let b = KSet::new(vec![1, 3, 4], &c3).unwrap();
        assert!(matches!(
            bond_condition(&a, &b),
            Err(Error::SizeMismatch { .. })
        ));
    }
}
