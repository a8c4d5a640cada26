//! Value types for k-sets, generator sets and families, the two partial
//! orders `leq` and `preceq`, the prefix-count function `mu`, closures, and
//! both definitions of left-compressed.
//!
//! All types are immutable values after construction and every operation is
//! a pure function of its inputs, so concurrent evaluation needs no
//! coordination.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// The pair (n, k): universe [n] = {1, .., n} and uniformity k.
///
/// Only contexts with 4 <= 2k <= n are accepted; everything downstream
/// (witness padding in particular) relies on 2k <= n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroundContext {
    n: u32,
    k: u32,
}

impl GroundContext {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if 4 <= 2 * k && 2 * k <= n {
            Ok(Self { n, k })
        } else {
            Err(Error::InvalidContext { n, k })
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// All k-subsets of [n] in lexicographic order.
    pub fn ksets(&self) -> Vec<KSet> {
        let mut raw = Vec::new();
        let mut cur = Vec::with_capacity(self.k as usize);
        ksubsets_rec(self.n, self.k as usize, &mut cur, &mut raw);
        raw.into_iter().map(|elements| KSet { elements }).collect()
    }

    /// All k-subsets of [n] in colexicographic order (largest elements
    /// compared first). Colex is a linear extension of the componentwise
    /// order: every set comes after everything it dominates.
    pub fn ksets_colex(&self) -> Vec<KSet> {
        let mut all = self.ksets();
        all.sort_by(colex_cmp);
        all
    }
}

fn ksubsets_rec(n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    let lo = cur.last().map_or(1, |&e| e + 1);
    let hi = n - (k - cur.len() - 1) as u32;
    for e in lo..=hi {
        cur.push(e);
        ksubsets_rec(n, k, cur, out);
        cur.pop();
    }
}

fn colex_cmp(a: &KSet, b: &KSet) -> Ordering {
    for (x, y) in a.elements.iter().rev().zip(b.elements.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn check_ascending_in_range(elements: &[u32], n: u32) -> Result<()> {
    for (position, &e) in elements.iter().enumerate() {
        if e < 1 || e > n {
            return Err(Error::ElementOutOfRange { element: e, n });
        }
        if position > 0 && elements[position - 1] >= e {
            return Err(Error::NotIncreasing { position });
        }
    }
    Ok(())
}

fn write_set(f: &mut fmt::Formatter<'_>, elements: &[u32]) -> fmt::Result {
    write!(f, "{{")?;
    for (i, e) in elements.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{e}")?;
    }
    write!(f, "}}")
}

/// A k-element subset of [n], stored strictly ascending. The derived `Ord`
/// is lexicographic on the element sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KSet {
    elements: Vec<u32>,
}

// k >= 2, so a KSet is never empty
#[allow(clippy::len_without_is_empty)]
impl KSet {
    pub fn new(elements: Vec<u32>, ctx: &GroundContext) -> Result<Self> {
        if elements.len() != ctx.k() as usize {
            return Err(Error::WrongLength {
                expected: ctx.k() as usize,
                got: elements.len(),
            });
        }
        check_ascending_in_range(&elements, ctx.n())?;
        Ok(Self { elements })
    }

    pub(crate) fn from_raw(elements: Vec<u32>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Self { elements }
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, e: u32) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    pub fn intersects(&self, other: &KSet) -> bool {
        slices_intersect(&self.elements, &other.elements)
    }

    /// The set with `j` removed and `i` inserted; the caller guarantees
    /// `j` is present and `i` absent.
    pub(crate) fn swap_element(&self, j: u32, i: u32) -> KSet {
        let mut v: Vec<u32> = self.elements.iter().copied().filter(|&e| e != j).collect();
        let pos = v.partition_point(|&e| e < i);
        v.insert(pos, i);
        KSet { elements: v }
    }
}

impl fmt::Display for KSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_set(f, &self.elements)
    }
}

/// A nonempty subset of [n] with at most k elements, stored strictly
/// ascending. Generators with more than k elements generate no k-set, so
/// they are rejected outright.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorSet {
    elements: Vec<u32>,
}

impl GeneratorSet {
    pub fn new(elements: Vec<u32>, ctx: &GroundContext) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptyGenerator);
        }
        if elements.len() > ctx.k() as usize {
            return Err(Error::GeneratorTooLong {
                got: elements.len(),
                k: ctx.k(),
            });
        }
        check_ascending_in_range(&elements, ctx.n())?;
        Ok(Self { elements })
    }

    /// Every k-set is a valid generator of its own size.
    pub fn from_kset(s: &KSet) -> Self {
        Self {
            elements: s.elements().to_vec(),
        }
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, e: u32) -> bool {
        self.elements.binary_search(&e).is_ok()
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_set(f, &self.elements)
    }
}

/// mu_X(l): how many elements of X are <= l. Errors when l is outside
/// [1, n]; use this at API boundaries and `count_upto` internally.
pub fn mu(x: &[u32], level: u32, ctx: &GroundContext) -> Result<usize> {
    if level < 1 || level > ctx.n() {
        return Err(Error::LevelOutOfRange {
            level,
            n: ctx.n(),
        });
    }
    Ok(count_upto(x, level))
}

pub(crate) fn count_upto(x: &[u32], level: u32) -> usize {
    x.partition_point(|&e| e <= level)
}

/// Componentwise order on equal-size sets: a_i <= b_i for every i.
pub fn leq(a: &[u32], b: &[u32]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.iter().zip(b).all(|(x, y)| x <= y))
}

/// Strict version of `leq`.
pub fn lt(a: &[u32], b: &[u32]) -> Result<bool> {
    Ok(leq(a, b)? && a != b)
}

/// Extended domination: |A| >= |B| and the first |B| elements of A are
/// componentwise <= B. Sets with |A| < |B| simply compare false.
pub fn preceq(a: &[u32], b: &[u32]) -> bool {
    a.len() >= b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn slices_intersect(a: &[u32], b: &[u32]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => return true,
        }
    }
    false
}

/// Every strictly increasing sequence componentwise dominated by `bounds`,
/// in lexicographic order. `bounds` must itself be strictly increasing.
pub(crate) fn dominated_sequences(bounds: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(bounds.len());
    descend_dominated(bounds, &mut cur, &mut out);
    out
}

fn descend_dominated(bounds: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cur.len() == bounds.len() {
        out.push(cur.clone());
        return;
    }
    let idx = cur.len();
    let lo = cur.last().map_or(1, |&e| e + 1);
    for e in lo..=bounds[idx] {
        cur.push(e);
        descend_dominated(bounds, cur, out);
        cur.pop();
    }
}

/// A duplicate-free collection of k-sets over one context, kept in
/// lexicographic order so equality is structural and output deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    context: GroundContext,
    members: Vec<KSet>,
}

impl SetFamily {
    /// Sorts the members and rejects duplicates and sets invalid under
    /// `context`.
    pub fn new(context: GroundContext, mut members: Vec<KSet>) -> Result<Self> {
        let k = context.k() as usize;
        for m in &members {
            if m.len() != k {
                return Err(Error::WrongLength {
                    expected: k,
                    got: m.len(),
                });
            }
            if let Some(&last) = m.elements().last() {
                if last > context.n() {
                    return Err(Error::ElementOutOfRange {
                        element: last,
                        n: context.n(),
                    });
                }
            }
        }
        members.sort();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateSet {
                set: w[0].to_string(),
            });
        }
        Ok(Self { context, members })
    }

    pub(crate) fn from_members_dedup(context: GroundContext, mut members: Vec<KSet>) -> Self {
        members.sort();
        members.dedup();
        Self { context, members }
    }

    pub(crate) fn from_sorted_unique(context: GroundContext, members: Vec<KSet>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self { context, members }
    }

    pub fn context(&self) -> GroundContext {
        self.context
    }

    pub fn members(&self) -> &[KSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &KSet) -> bool {
        self.members.binary_search(s).is_ok()
    }

    pub fn union(&self, other: &SetFamily) -> Result<SetFamily> {
        if self.context != other.context {
            return Err(Error::ContextMismatch);
        }
        let mut merged = self.members.clone();
        merged.extend(other.members.iter().cloned());
        Ok(SetFamily::from_members_dedup(self.context, merged))
    }
}

/// A duplicate-free collection of generator sets over one context, kept in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorCollection {
    context: GroundContext,
    generators: Vec<GeneratorSet>,
}

impl GeneratorCollection {
    pub fn new(context: GroundContext, mut generators: Vec<GeneratorSet>) -> Result<Self> {
        for g in &generators {
            if g.len() > context.k() as usize {
                return Err(Error::GeneratorTooLong {
                    got: g.len(),
                    k: context.k(),
                });
            }
            if let Some(&last) = g.elements().last() {
                if last > context.n() {
                    return Err(Error::ElementOutOfRange {
                        element: last,
                        n: context.n(),
                    });
                }
            }
        }
        generators.sort();
        if let Some(w) = generators.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateSet {
                set: w[0].to_string(),
            });
        }
        Ok(Self {
            context,
            generators,
        })
    }

    pub(crate) fn from_dedup(context: GroundContext, mut generators: Vec<GeneratorSet>) -> Self {
        generators.sort();
        generators.dedup();
        Self {
            context,
            generators,
        }
    }

    pub fn context(&self) -> GroundContext {
        self.context
    }

    pub fn generators(&self) -> &[GeneratorSet] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// The left-compression closure L(A): every k-set componentwise <= A,
/// enumerated by recursive descent in lexicographic order. A itself is
/// always a member.
pub fn lower_closure(a: &KSet, ctx: &GroundContext) -> SetFamily {
    let members = dominated_sequences(a.elements())
        .into_iter()
        .map(KSet::from_raw)
        .collect();
    SetFamily::from_sorted_unique(*ctx, members)
}

/// Down-closure definition of left-compressed: with every member, the
/// family contains everything componentwise below it.
pub fn is_left_compressed_downclosed(f: &SetFamily) -> bool {
    left_compressed_violation(f).is_none()
}

/// First violation of down-closure in (member, missing-set) lexicographic
/// order, if any.
pub fn left_compressed_violation(f: &SetFamily) -> Option<(KSet, KSet)> {
    let ctx = f.context();
    for a in f.members() {
        for b in lower_closure(a, &ctx).members() {
            if !f.contains(b) {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

/// Shift-stability definition of left-compressed: for all i < j and every
/// member with j but not i, the member with j swapped for i is present.
pub fn is_left_compressed_shiftstable(f: &SetFamily) -> bool {
    shift_stability_violation(f).is_none()
}

/// First (i, j, member) whose shifted set is missing, scanning members in
/// lexicographic order and then j ascending, i ascending.
pub fn shift_stability_violation(f: &SetFamily) -> Option<(u32, u32, KSet)> {
    for a in f.members() {
        for &j in a.elements() {
            for i in 1..j {
                if !a.contains(i) && !f.contains(&a.swap_element(j, i)) {
                    return Some((i, j, a.clone()));
                }
            }
        }
    }
    None
}

/// Members with no strict componentwise dominator in the family. Nonempty
/// for nonempty input since the order is finite.
pub fn maximal_sets(f: &SetFamily) -> Result<SetFamily> {
    if f.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let members: Vec<KSet> = f
        .members()
        .iter()
        .filter(|a| {
            !f.members()
                .iter()
                .any(|b| lt(a.elements(), b.elements()).expect("equal sizes within a family"))
        })
        .cloned()
        .collect();
    Ok(SetFamily::from_sorted_unique(f.context(), members))
}

/// Whether the intersection of all members is nonempty. Conventions differ
/// on whether such a family is the "trivial" one; this is the raw
/// predicate only.
pub fn has_common_element(f: &SetFamily) -> Result<bool> {
    let mut members = f.members().iter();
    let first = members.next().ok_or(Error::EmptyFamily)?;
    let mut common: Vec<u32> = first.elements().to_vec();
    for m in members {
        common.retain(|&e| m.contains(e));
        if common.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}
