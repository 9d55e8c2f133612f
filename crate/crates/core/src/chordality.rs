//! Chords of circuits, ℓ-chordality, ℓ-closedness and the Δ-closure of a
//! circuit family, together with the three-way equivalence report that
//! ties them together for simple binary matroids.

use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::matroid::{BinaryMatroid, CircuitFamily, Matroid};
use std::collections::BTreeSet;
use std::fmt;

/// Cap on the ground-set size for the `2^n` subset sweep of
/// [`is_ell_closed`]; beyond it the operation refuses rather than sample.
pub const SUBSET_SWEEP_CAP: usize = 20;

/// A chord `i0` of a circuit, with the two circuits it splits it into:
/// `c1 ∩ c2 = {i0}` and `c1 Δ c2` is the split circuit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChordWitness {
    /// 0-based index of the chord element.
    pub chord: usize,
    pub c1: ElementSet,
    pub c2: ElementSet,
}

impl ChordWitness {
    /// 1-based label of the chord element.
    pub fn chord_label(&self) -> usize {
        self.chord + 1
    }

    /// The circuit this witness splits.
    pub fn split_circuit(&self) -> ElementSet {
        self.c1.symmetric_difference(self.c2)
    }

    /// Re-verifies the witness against a circuit family.
    pub fn is_valid_for(&self, circuits: &CircuitFamily, circuit: ElementSet) -> bool {
        self.c1.intersection(self.c2) == ElementSet::singleton(self.chord)
            && self.split_circuit() == circuit
            && circuits.contains(self.c1)
            && circuits.contains(self.c2)
    }
}

impl fmt::Display for ChordWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "chord {} splits into {} and {}",
            self.chord_label(),
            self.c1,
            self.c2
        )
    }
}

/// Finds a chord of the circuit `c`, if any.
///
/// Chords are tried in increasing element order and circuit pairs in
/// lexicographic order, so the returned witness is deterministic. For a
/// simple binary matroid the search first applies the closure criterion:
/// a circuit has a chord iff its closure is strictly larger.
pub fn find_chord<M: Matroid + ?Sized>(m: &M, c: ElementSet) -> Result<Option<ChordWitness>> {
    let circuits = m.circuits()?;
    if !circuits.contains(c) {
        return Err(Error::NotACircuit(c));
    }
    let binary_shortcut = m.is_binary() && m.is_simple();
    if binary_shortcut && m.closure_of(c) == c {
        return Ok(None);
    }
    for i0 in m.ground_set().difference(c).iter() {
        let chord_only = ElementSet::singleton(i0);
        for c1 in circuits.iter() {
            if c1.difference(c) != chord_only {
                continue;
            }
            let c2 = c.symmetric_difference(c1);
            if circuits.contains(c2) && c1.intersection(c2) == chord_only {
                let (a, b) = if c1 <= c2 { (c1, c2) } else { (c2, c1) };
                let witness = ChordWitness {
                    chord: i0,
                    c1: a,
                    c2: b,
                };
                debug_assert!(witness.is_valid_for(circuits, c));
                return Ok(Some(witness));
            }
        }
    }
    debug_assert!(
        !binary_shortcut,
        "a circuit of a simple binary matroid with strict closure must have a chord"
    );
    Ok(None)
}

/// The first circuit with at least `ell` elements that has no chord,
/// in lexicographic order; `None` when the matroid is `ell`-chordal.
pub fn find_chordless_circuit<M: Matroid + ?Sized>(
    m: &M,
    ell: usize,
) -> Result<Option<ElementSet>> {
    assert!(ell >= 2, "ell-chordality is defined for ell >= 2");
    if !m.is_simple() {
        return Err(Error::NotSimple);
    }
    for c in m.circuits()?.iter() {
        if c.len() >= ell && find_chord(m, c)?.is_none() {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// True iff every circuit with at least `ell` elements has a chord.
pub fn is_ell_chordal<M: Matroid + ?Sized>(m: &M, ell: usize) -> Result<bool> {
    Ok(find_chordless_circuit(m, ell)?.is_none())
}

/// Chordal means 4-chordal.
pub fn is_chordal<M: Matroid + ?Sized>(m: &M) -> Result<bool> {
    is_ell_chordal(m, 4)
}

/// True iff closedness of every subset is certified by its small circuits:
/// whenever every circuit with at most `ell + 1` elements that meets `X`
/// in all but one element is contained in `X`, then `X` is closed.
pub fn is_ell_closed(m: &BinaryMatroid, ell: usize) -> Result<bool> {
    assert!(ell >= 2, "ell-closedness is defined for ell >= 2");
    let n = m.ground_size();
    if n > SUBSET_SWEEP_CAP {
        return Err(Error::EnumerationCapExceeded {
            what: "subset sweep (2^n)",
            size: n,
            cap: SUBSET_SWEEP_CAP,
        });
    }
    let small: Vec<ElementSet> = m.circuits()?.at_most(ell + 1).as_slice().to_vec();
    let top = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for mask in 0..=top {
        let x = ElementSet::from_bits(mask);
        // |C ∩ X| >= |C| - 1  ==>  C ⊆ X, i.e. never |C \ X| = 1.
        let certified = small.iter().all(|c| c.difference(x).len() != 1);
        if certified && !m.is_flat(x) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The least circuit family containing `seed` and closed under merging a
/// split pair back into the split circuit. Candidates are processed in
/// increasing size; the fixpoint is independent of insertion order.
pub fn delta_closure<M: Matroid + ?Sized>(m: &M, seed: &CircuitFamily) -> Result<CircuitFamily> {
    let circuits = m.circuits()?;
    for s in seed.iter() {
        if !circuits.contains(s) {
            return Err(Error::SeedNotCircuits(s));
        }
    }
    let mut have: BTreeSet<ElementSet> = seed.iter().collect();
    let mut pending: Vec<ElementSet> = circuits.iter().filter(|c| !have.contains(c)).collect();
    pending.sort_by_key(|&c| (c.len(), c));
    loop {
        let added: Vec<ElementSet> = pending
            .iter()
            .copied()
            .filter(|&c| splits_into(&have, c))
            .collect();
        if added.is_empty() {
            return Ok(CircuitFamily::from_minimal(have.into_iter().collect()));
        }
        have.extend(added.iter().copied());
        pending.retain(|c| !have.contains(c));
    }
}

/// Does `c` split into two members of `have` sharing exactly one element?
fn splits_into(have: &BTreeSet<ElementSet>, c: ElementSet) -> bool {
    for &c1 in have {
        let out = c1.difference(c);
        if out.len() != 1 {
            continue;
        }
        let c2 = c.symmetric_difference(c1);
        if have.contains(&c2) && c1.intersection(c2) == out {
            return true;
        }
    }
    false
}

/// The three equivalent conditions for a simple binary matroid:
/// `ell`-closed, `(ell+2)`-chordal, and circuits generated from the
/// circuits with at most `ell + 1` elements by Δ-closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub ell: usize,
    pub ell_closed: bool,
    pub chordal_ell2: bool,
    pub delta_generated: bool,
}

impl EquivalenceReport {
    /// Whether the three verdicts agree.
    pub fn consistent(&self) -> bool {
        self.ell_closed == self.chordal_ell2 && self.chordal_ell2 == self.delta_generated
    }
}

impl fmt::Display for EquivalenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ell={}: ell_closed={} chordal_ell2={} delta_generated={}",
            self.ell, self.ell_closed, self.chordal_ell2, self.delta_generated
        )
    }
}

/// Evaluates all three conditions independently and reports them.
pub fn equivalence_report(m: &BinaryMatroid, ell: usize) -> Result<EquivalenceReport> {
    if !m.is_simple() {
        return Err(Error::NotSimple);
    }
    let ell_closed = is_ell_closed(m, ell)?;
    let chordal_ell2 = is_ell_chordal(m, ell + 2)?;
    let full = m.circuits()?;
    let delta = delta_closure(m, &full.at_most(ell + 1))?;
    let delta_generated = delta == *full;
    Ok(EquivalenceReport {
        ell,
        ell_closed,
        chordal_ell2,
        delta_generated,
    })
}
