//! Recovery-set partition and single-erasure repair by interpolation.
//!
//! Columns sharing a level-(i−1) prefix form a fiber of exactly q places
//! whose top coordinates are the q distinct solutions of one trace
//! equation. Every code function restricted to such a fiber is a univariate
//! polynomial of degree ≤ q−2 in the top coordinate, so any q−1 intact
//! members determine the erased one: locality r = q−1.

use std::fmt;

use crate::gf::{Fe, FieldSpec};
use crate::tower::Place;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecoveryError {
    /// Two or more members of the erased position's set are missing.
    SiblingsMissing { set_id: usize, missing: usize },
    /// The erased position does not belong to the given set.
    NotInSet { set_id: usize, position: usize },
    /// Word length disagrees with the column count.
    WordLength { expected: usize, got: usize },
    /// Fibers did not partition cleanly (level-0 input or corrupt order).
    MalformedFibers(String),
}

impl fmt::Display for RecoveryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecoveryError::SiblingsMissing { set_id, missing } => write!(
                f,
                "recovery set {set_id} has {missing} further missing symbols; single-erasure \
                 repair needs all q-1 siblings"
            ),
            RecoveryError::NotInSet { set_id, position } => {
                write!(f, "position {position} is not a member of recovery set {set_id}")
            }
            RecoveryError::WordLength { expected, got } => {
                write!(f, "word length {got}, expected at least {expected}")
            }
            RecoveryError::MalformedFibers(m) => write!(f, "malformed recovery fibers: {m}"),
        }
    }
}

impl std::error::Error for RecoveryError {}

/// One fiber of the recovery partition: q column positions sharing a
/// level-(i−1) prefix, with their distinct top coordinates.
#[derive(Debug, Clone)]
pub struct RecoverySet {
    pub set_id: usize,
    pub positions: Vec<usize>,
    pub prefix: Vec<Fe>,
    pub top_coords: Vec<Fe>,
}

/// Partitions the canonical column order into q^(i−1)·(q²−q) recovery sets
/// of size q each. Places must be a full level-i enumeration (i ≥ 1) in
/// canonical order, where fibers are contiguous.
pub fn recovery_sets(places: &[Place], q: u32) -> Result<Vec<RecoverySet>, RecoveryError> {
    let q = q as usize;
    if places.is_empty() || places[0].level() == 0 {
        return Err(RecoveryError::MalformedFibers(
            "recovery needs a level >= 1 enumeration".into(),
        ));
    }
    if !places.len().is_multiple_of(q) {
        return Err(RecoveryError::MalformedFibers(format!(
            "{} places do not split into fibers of size {q}",
            places.len()
        )));
    }
    let mut sets = Vec::with_capacity(places.len() / q);
    for (set_id, chunk) in places.chunks(q).enumerate() {
        let prefix = chunk[0].prefix().to_vec();
        let mut top_coords = Vec::with_capacity(q);
        for p in chunk {
            if p.prefix() != prefix.as_slice() {
                return Err(RecoveryError::MalformedFibers(format!(
                    "fiber {set_id} mixes prefixes"
                )));
            }
            if top_coords.contains(&p.top()) {
                return Err(RecoveryError::MalformedFibers(format!(
                    "fiber {set_id} repeats a top coordinate"
                )));
            }
            top_coords.push(p.top());
        }
        sets.push(RecoverySet {
            set_id,
            positions: (set_id * q..(set_id + 1) * q).collect(),
            prefix,
            top_coords,
        });
    }
    Ok(sets)
}

/// The set containing a column position, given the full partition.
pub fn set_of_position(sets: &[RecoverySet], position: usize) -> Option<&RecoverySet> {
    sets.iter().find(|s| s.positions.contains(&position))
}

/// Outcome of one repair: the recovered symbol and the sibling positions it
/// actually read (always exactly q−1 of them).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Repair {
    pub value: Fe,
    pub used_positions: Vec<usize>,
}

/// Repairs the symbol at `erased` from its q−1 siblings in `set` by
/// Lagrange interpolation of the degree-≤(q−2) restriction.
pub fn recover_erasure(
    field: &FieldSpec,
    set: &RecoverySet,
    word: &[Option<Fe>],
    erased: usize,
) -> Result<Repair, RecoveryError> {
    let Some(slot) = set.positions.iter().position(|&p| p == erased) else {
        return Err(RecoveryError::NotInSet { set_id: set.set_id, position: erased });
    };
    let mut xs = Vec::with_capacity(set.positions.len() - 1);
    let mut ys = Vec::with_capacity(set.positions.len() - 1);
    let mut used = Vec::with_capacity(set.positions.len() - 1);
    let mut missing = 0;
    for (i, &pos) in set.positions.iter().enumerate() {
        if i == slot {
            continue;
        }
        let Some(value) = *word.get(pos).ok_or(RecoveryError::WordLength {
            expected: pos + 1,
            got: word.len(),
        })? else {
            missing += 1;
            continue;
        };
        xs.push(set.top_coords[i]);
        ys.push(value);
        used.push(pos);
    }
    if missing > 0 {
        return Err(RecoveryError::SiblingsMissing { set_id: set.set_id, missing });
    }

    // Lagrange evaluation at the erased top coordinate.
    let xe = set.top_coords[slot];
    let mut acc = field.zero();
    for k in 0..xs.len() {
        let mut term = ys[k];
        for m in 0..xs.len() {
            if m == k {
                continue;
            }
            let num = field.sub(xe, xs[m]);
            let den = field.sub(xs[k], xs[m]);
            let inv = field.inv(den).expect("distinct interpolation nodes");
            term = field.mul(term, field.mul(num, inv));
        }
        acc = field.add(acc, term);
    }
    Ok(Repair { value: acc, used_positions: used })
}
