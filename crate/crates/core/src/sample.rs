//! Seeded random families and generator collections for property runs.
//! Everything here is deterministic in the seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::intersect::criterion;
use crate::sets::{GeneratorCollection, GeneratorSet, GroundContext, KSet, SetFamily};
use crate::shift::compress;

/// Random maximal intersecting family: shuffle all k-sets and insert each
/// one that meets everything kept so far. The first candidate always
/// enters, so the result is nonempty.
pub fn random_intersecting_family(ctx: &GroundContext, seed: u64) -> SetFamily {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates = ctx.ksets();
    candidates.shuffle(&mut rng);
    let mut kept: Vec<KSet> = Vec::new();
    for s in candidates {
        if kept.iter().all(|m| m.intersects(&s)) {
            kept.push(s);
        }
    }
    SetFamily::from_members_dedup(*ctx, kept)
}

/// Random left-compressed intersecting family: compress a random
/// intersecting family. Compression preserves both size and the
/// intersecting property.
pub fn random_lcif(ctx: &GroundContext, seed: u64) -> SetFamily {
    compress(&random_intersecting_family(ctx, seed)).0
}

/// Random strongly intersecting generator collection drawn from the
/// nonempty subsets of [ground] with at most k elements: shuffle the
/// candidates and greedily keep each one that passes the criterion
/// against itself and everything kept, stopping at a seed-dependent
/// target size. {1} passes against anything, so the result is nonempty.
pub fn random_strongly_intersecting_collection(
    ctx: &GroundContext,
    ground: u32,
    seed: u64,
) -> GeneratorCollection {
    assert!(ground >= 1 && ground <= ctx.n());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates = subsets_up_to(ground, ctx.k() as usize);
    candidates.shuffle(&mut rng);
    let target: usize = rng.random_range(1..=6);
    let mut kept: Vec<GeneratorSet> = Vec::new();
    for elems in candidates {
        if kept.len() >= target {
            break;
        }
        let ok = criterion(&elems, &elems).holds
            && kept
                .iter()
                .all(|g| criterion(g.elements(), &elems).holds);
        if ok {
            kept.push(GeneratorSet::new(elems, ctx).expect("candidate fits the context"));
        }
    }
    GeneratorCollection::from_dedup(*ctx, kept)
}

/// All nonempty ascending sequences over [ground] with at most `max_size`
/// elements, ordered by size then lexicographically.
fn subsets_up_to(ground: u32, max_size: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    for size in 1..=max_size {
        grow(ground, size, &mut cur, &mut out);
    }
    out
}

fn grow(ground: u32, size: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cur.len() == size {
        out.push(cur.clone());
        return;
    }
    let lo = cur.last().map_or(1, |&e| e + 1);
    for e in lo..=ground {
        cur.push(e);
        grow(ground, size, cur, out);
        cur.pop();
    }
}
