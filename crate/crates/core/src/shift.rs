//! The (i, j)-shift and iterated compression of a family to its
//! left-compressed fixed point.

use crate::error::{Error, Result};
use crate::sets::{KSet, SetFamily};

/// One effective shift: the pair applied and how many members moved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AppliedShift {
    pub i: u32,
    pub j: u32,
    pub moved: usize,
}

/// Accounting for a full compression run. Shifts replace members rather
/// than deleting them, so input and output sizes always agree. `rounds`
/// counts the full sweeps performed, including the final one that changed
/// nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftReport {
    pub input_size: usize,
    pub output_size: usize,
    pub rounds: usize,
    pub applied: Vec<AppliedShift>,
}

/// Replaces each member containing j but not i by the set with j swapped
/// for i, unless that set is already present. Candidates are processed in
/// lexicographic member order against the family state at the start of
/// the pass; replacements land atomically at the end.
pub fn ij_shift(f: &SetFamily, i: u32, j: u32) -> Result<SetFamily> {
    Ok(ij_shift_counted(f, i, j)?.0)
}

fn ij_shift_counted(f: &SetFamily, i: u32, j: u32) -> Result<(SetFamily, usize)> {
    let n = f.context().n();
    if i < 1 || i >= j || j > n {
        return Err(Error::InvalidShift { i, j, n });
    }
    let mut out: Vec<KSet> = Vec::with_capacity(f.len());
    let mut replaced: Vec<KSet> = Vec::new();
    for a in f.members() {
        if a.contains(j) && !a.contains(i) {
            let target = a.swap_element(j, i);
            if !f.contains(&target) && !replaced.contains(&target) {
                replaced.push(target.clone());
                out.push(target);
                continue;
            }
        }
        out.push(a.clone());
    }
    let moved = replaced.len();
    out.sort();
    // distinct candidates have distinct targets and every target contains
    // i but not j, so it can never equal a kept candidate; the map is
    // injective and cardinality is preserved
    debug_assert!(out.windows(2).all(|w| w[0] != w[1]));
    Ok((SetFamily::from_sorted_unique(f.context(), out), moved))
}

/// Sweeps all pairs i < j in lexicographic order, applying shifts until a
/// full sweep changes nothing. The fixed point is shift-stable (and hence
/// down-closed), has the same cardinality, and stays intersecting when the
/// input was. Sweep order is part of the contract: a different order may
/// reach a different fixed point.
pub fn compress(f: &SetFamily) -> (SetFamily, ShiftReport) {
    let n = f.context().n();
    let mut cur = f.clone();
    let mut applied = Vec::new();
    let mut rounds = 0;
    loop {
        rounds += 1;
        let mut changed = false;
        for i in 1..n {
            for j in (i + 1)..=n {
                let (next, moved) =
                    ij_shift_counted(&cur, i, j).expect("sweep indices are in range");
                if moved > 0 {
                    // every moved member strictly drops its element sum;
                    // this is the loop variant
                    debug_assert!(weight(&next) < weight(&cur));
                    applied.push(AppliedShift { i, j, moved });
                    cur = next;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let report = ShiftReport {
        input_size: f.len(),
        output_size: cur.len(),
        rounds,
        applied,
    };
    (cur, report)
}

fn weight(f: &SetFamily) -> u64 {
    f.members()
        .iter()
        .flat_map(|m| m.elements())
        .map(|&e| u64::from(e))
        .sum()
}
