//! Modular flats, M-chains and M-partitions.
//!
//! An M-chain is a maximal chain of modular flats; a matroid admitting one
//! is supersolvable. The search is a top-down depth-first descent through
//! the flat lattice: from the full ground set, pick a modular flat of the
//! next lower rank contained in the current one, in lexicographic order.
//! Modularity is always tested in the ambient matroid, against every flat.

use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::matroid::{BinaryMatroid, Flat, Matroid};
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

/// A maximal chain of modular flats `F_0 ⊊ F_1 ⊊ ... ⊊ F_r`, stored
/// bottom-up; `flats()[k]` has rank `k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MChain {
    flats: Vec<ElementSet>,
}

impl MChain {
    pub(crate) fn new(flats: Vec<ElementSet>) -> Self {
        debug_assert!(!flats.is_empty());
        debug_assert!(flats.windows(2).all(|w| w[0].is_subset_of(w[1]) && w[0] != w[1]));
        MChain { flats }
    }

    /// Wraps an explicit strictly increasing flat sequence. Only the
    /// shape is checked here; run [`validate_mchain`] to confirm the
    /// sets are modular flats of a particular matroid.
    pub fn from_flats(flats: Vec<ElementSet>) -> Result<Self> {
        if flats.is_empty() {
            return Err(Error::InvalidChain("a chain needs at least one flat".into()));
        }
        for w in flats.windows(2) {
            if !(w[0].is_subset_of(w[1]) && w[0] != w[1]) {
                return Err(Error::InvalidChain(format!(
                    "{} does not strictly contain {}",
                    w[1], w[0]
                )));
            }
        }
        Ok(MChain { flats })
    }

    pub fn flats(&self) -> &[ElementSet] {
        &self.flats
    }

    pub fn rank(&self) -> usize {
        self.flats.len() - 1
    }

    pub fn top(&self) -> ElementSet {
        *self.flats.last().expect("chain is nonempty")
    }

    pub fn flat_set(&self) -> BTreeSet<ElementSet> {
        self.flats.iter().copied().collect()
    }

    /// The block sequence `P_i = F_i \ F_{i-1}`.
    pub fn partition(&self) -> MPartition {
        MPartition {
            blocks: self
                .flats
                .windows(2)
                .map(|w| w[1].difference(w[0]))
                .collect(),
        }
    }
}

impl fmt::Display for MChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, flat) in self.flats.iter().enumerate() {
            if i > 0 {
                write!(f, " < ")?;
            }
            write!(f, "{flat}")?;
        }
        Ok(())
    }
}

/// The ordered blocks `P_1, ..., P_r` of an M-chain: disjoint, nonempty,
/// with union the ground set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPartition {
    blocks: Vec<ElementSet>,
}

impl MPartition {
    pub fn from_blocks(blocks: Vec<ElementSet>) -> Self {
        MPartition { blocks }
    }

    pub fn blocks(&self) -> &[ElementSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Recovers the chain flats `∅, F_1, ..., F_r` by cumulative union
    /// (valid for simple matroids, where `cl(∅) = ∅`).
    pub fn chain_flats(&self) -> Vec<ElementSet> {
        let mut out = Vec::with_capacity(self.blocks.len() + 1);
        let mut acc = ElementSet::empty();
        out.push(acc);
        for &b in &self.blocks {
            acc = acc.union(b);
            out.push(acc);
        }
        out
    }
}

impl fmt::Display for MPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// The block sequence associated to an M-chain.
pub fn mpartition(chain: &MChain) -> MPartition {
    chain.partition()
}

fn validate_flat(m: &BinaryMatroid, f: &Flat) -> Result<()> {
    let cl = m.closure(f.elements);
    if cl.elements != f.elements || cl.rank != f.rank {
        return Err(Error::NotAFlat(f.elements));
    }
    Ok(())
}

fn modular_pair_unchecked(m: &BinaryMatroid, a: ElementSet, b: ElementSet) -> bool {
    if a.is_subset_of(b) || b.is_subset_of(a) {
        return true;
    }
    let join = m.rank_of(a.union(b));
    let meet = m.rank_of(a.intersection(b));
    m.rank_of(a) + m.rank_of(b) == join + meet
}

/// The rank identity `r(F) + r(F') = r(F ∨ F') + r(F ∧ F')`, with the join
/// taken as the closure of the union and the meet as the intersection.
pub fn is_modular_pair(m: &BinaryMatroid, f1: &Flat, f2: &Flat) -> Result<bool> {
    validate_flat(m, f1)?;
    validate_flat(m, f2)?;
    Ok(modular_pair_unchecked(m, f1.elements, f2.elements))
}

pub(crate) fn is_modular_flat_unchecked(m: &BinaryMatroid, f: ElementSet) -> Result<bool> {
    if let Some(v) = m.modular_memo_get(f) {
        return Ok(v);
    }
    let lattice = m.flats()?;
    let verdict = lattice
        .iter_all()
        .all(|g| modular_pair_unchecked(m, f, g.elements));
    m.modular_memo_insert(f, verdict);
    Ok(verdict)
}

/// True iff `f` forms a modular pair with every flat.
pub fn is_modular_flat(m: &BinaryMatroid, f: &Flat) -> Result<bool> {
    validate_flat(m, f)?;
    is_modular_flat_unchecked(m, f.elements)
}

fn descend(
    m: &BinaryMatroid,
    current: ElementSet,
    k: usize,
    acc: &mut Vec<ElementSet>,
    out: &mut Vec<MChain>,
    first_only: bool,
) -> Result<bool> {
    if k == 0 {
        let mut flats = acc.clone();
        flats.reverse();
        out.push(MChain::new(flats));
        return Ok(true);
    }
    let lattice = m.flats()?;
    for f in lattice.level(k - 1) {
        if !f.elements.is_subset_of(current) || !is_modular_flat_unchecked(m, f.elements)? {
            continue;
        }
        acc.push(f.elements);
        let done = descend(m, f.elements, k - 1, acc, out, first_only)?;
        acc.pop();
        if done && first_only {
            return Ok(true);
        }
    }
    Ok(false)
}

fn search_mchains(m: &BinaryMatroid, first_only: bool) -> Result<Vec<MChain>> {
    if !m.is_simple() {
        return Err(Error::NotSimple);
    }
    let top = m.ground_set();
    let mut acc = vec![top];
    let mut out = Vec::new();
    descend(m, top, m.rank(), &mut acc, &mut out, first_only)?;
    out.sort();
    Ok(out)
}

/// The lexicographically first M-chain, or `None` iff the matroid is not
/// supersolvable.
pub fn find_mchain(m: &BinaryMatroid) -> Result<Option<MChain>> {
    Ok(search_mchains(m, true)?.into_iter().next())
}

/// Every M-chain, in lexicographic order.
pub fn all_mchains(m: &BinaryMatroid) -> Result<Vec<MChain>> {
    search_mchains(m, false)
}

/// Full re-validation of a chain: endpoints, strict inclusion, flatness,
/// rank-per-level and modularity of every member.
pub fn validate_mchain(m: &BinaryMatroid, chain: &MChain) -> Result<()> {
    let flats = chain.flats();
    if flats.len() != m.rank() + 1 {
        return Err(Error::InvalidChain(format!(
            "expected {} flats, found {}",
            m.rank() + 1,
            flats.len()
        )));
    }
    let bottom = m.closure(ElementSet::empty()).elements;
    if flats[0] != bottom {
        return Err(Error::InvalidChain(format!(
            "chain must start at {bottom}, found {}",
            flats[0]
        )));
    }
    if *flats.last().unwrap() != m.ground_set() {
        return Err(Error::InvalidChain("chain must end at the ground set".into()));
    }
    for (k, &f) in flats.iter().enumerate() {
        if k > 0 && !(flats[k - 1].is_subset_of(f) && flats[k - 1] != f) {
            return Err(Error::InvalidChain(format!(
                "{} does not strictly contain {}",
                f,
                flats[k - 1]
            )));
        }
        let cl = m.closure(f);
        if cl.elements != f || cl.rank != k {
            return Err(Error::InvalidChain(format!(
                "{f} is not a flat of rank {k}"
            )));
        }
        if !is_modular_flat_unchecked(m, f)? {
            return Err(Error::InvalidChain(format!("{f} is not modular")));
        }
    }
    Ok(())
}

/// Intersects each chain flat with `f` and drops consecutive duplicates,
/// producing (in original element labels) an M-chain of the restriction
/// to `f`. The result is validated inside the restriction.
pub fn restrict_chain(m: &BinaryMatroid, chain: &MChain, f: &Flat) -> Result<MChain> {
    validate_flat(m, f)?;
    validate_mchain(m, chain)?;
    let mut flats: Vec<ElementSet> = Vec::with_capacity(f.rank + 1);
    for &c in chain.flats() {
        let cut = c.intersection(f.elements);
        if flats.last() != Some(&cut) {
            flats.push(cut);
        }
    }
    let restriction = m.restriction(f.elements);
    let translated: Vec<ElementSet> = flats
        .iter()
        .map(|&s| {
            restriction
                .to_restricted(s)
                .expect("chain members intersected with f lie inside f")
        })
        .collect();
    validate_mchain(&restriction.matroid, &MChain::new(translated))?;
    Ok(MChain::new(flats))
}

/// Two M-chains of the same matroid differ by at most one flat.
pub fn is_elementary_deformation(c1: &MChain, c2: &MChain) -> Result<bool> {
    if c1.rank() != c2.rank() || c1.top() != c2.top() {
        return Err(Error::DifferentMatroids);
    }
    let diff = c1
        .flats()
        .iter()
        .zip(c2.flats())
        .filter(|(a, b)| a != b)
        .count();
    Ok(diff <= 1)
}

/// A shortest sequence of elementary deformations from `c1` to `c2`,
/// found by breadth-first search over all M-chains.
pub fn deformation_path(m: &BinaryMatroid, c1: &MChain, c2: &MChain) -> Result<Vec<MChain>> {
    validate_mchain(m, c1)?;
    validate_mchain(m, c2)?;
    let chains = all_mchains(m)?;
    let index_of = |c: &MChain| chains.binary_search(c);
    let (start, goal) = match (index_of(c1), index_of(c2)) {
        (Ok(s), Ok(g)) => (s, g),
        _ => return Err(Error::InvalidChain("chain not found among all M-chains".into())),
    };
    let mut prev: Vec<Option<usize>> = vec![None; chains.len()];
    let mut seen = vec![false; chains.len()];
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    while let Some(i) = queue.pop_front() {
        if i == goal {
            let mut path = vec![chains[i].clone()];
            let mut at = i;
            while let Some(p) = prev[at] {
                path.push(chains[p].clone());
                at = p;
            }
            path.reverse();
            return Ok(path);
        }
        for (j, c) in chains.iter().enumerate() {
            if !seen[j] && is_elementary_deformation(&chains[i], c)? {
                seen[j] = true;
                prev[j] = Some(i);
                queue.push_back(j);
            }
        }
    }
    Err(Error::NoPathFound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{complete_bipartite, complete_graph, cycle_graph, fan_graph, fano};
    use crate::graphs::{cocycle_matroid, cycle_matroid};

    fn labels(v: &[usize]) -> ElementSet {
        ElementSet::from_labels(v.iter().copied())
    }

    fn g0() -> BinaryMatroid {
        cycle_matroid(&fan_graph(4)).unwrap()
    }

    fn dual_k33() -> BinaryMatroid {
        cocycle_matroid(&complete_bipartite(3, 3)).unwrap()
    }

    fn g0_example_chain() -> MChain {
        MChain::new(vec![
            ElementSet::empty(),
            labels(&[1]),
            labels(&[1, 2, 3]),
            labels(&[1, 2, 3, 4, 5]),
            ElementSet::full(7),
        ])
    }

    #[test]
    fn nested_flats_are_modular_pairs() {
        let m = g0();
        let f1 = m.closure(labels(&[1]));
        let f2 = m.closure(labels(&[1, 2]));
        assert!(is_modular_pair(&m, &f1, &f2).unwrap());
    }

    #[test]
    fn fano_lines_are_modular_pairs() {
        let m = fano();
        let lines = m.nontrivial_lines().unwrap();
        for (i, l1) in lines.iter().enumerate() {
            for l2 in &lines[i + 1..] {
                assert!(is_modular_pair(&m, l1, l2).unwrap());
            }
        }
    }

    #[test]
    fn g0_two_points_modular_pair() {
        let m = g0();
        let f1 = m.closure(labels(&[4]));
        let f2 = m.closure(labels(&[6]));
        assert!(is_modular_pair(&m, &f1, &f2).unwrap());
    }

    #[test]
    fn modular_pair_rejects_non_flats() {
        let m = g0();
        let fake = Flat {
            elements: labels(&[1, 2]),
            rank: 2,
        };
        let ok = m.closure(labels(&[1]));
        assert!(matches!(
            is_modular_pair(&m, &fake, &ok),
            Err(Error::NotAFlat(_))
        ));
    }

    #[test]
    fn trivial_flats_are_modular() {
        let m = g0();
        let bottom = m.closure(ElementSet::empty());
        let top = m.closure(ElementSet::full(7));
        assert!(is_modular_flat(&m, &bottom).unwrap());
        assert!(is_modular_flat(&m, &top).unwrap());
    }

    #[test]
    fn every_fano_flat_is_modular() {
        let m = fano();
        for f in m.flats().unwrap().clone().iter_all() {
            assert!(is_modular_flat(&m, f).unwrap(), "{f} should be modular");
        }
    }

    #[test]
    fn dual_k33_has_no_modular_hyperplane() {
        let m = dual_k33();
        assert_eq!(m.rank(), 4);
        for h in m.flats().unwrap().clone().hyperplanes() {
            assert!(!is_modular_flat(&m, h).unwrap(), "{h} should not be modular");
        }
    }

    #[test]
    fn g0_first_chain_matches_published_example() {
        let m = g0();
        let chain = find_mchain(&m).unwrap().unwrap();
        assert_eq!(chain, g0_example_chain());
        validate_mchain(&m, &chain).unwrap();
    }

    #[test]
    fn fano_is_supersolvable() {
        let m = fano();
        let chain = find_mchain(&m).unwrap().unwrap();
        validate_mchain(&m, &chain).unwrap();
        assert_eq!(chain.rank(), 3);
        assert_eq!(chain.flats()[1].len(), 1);
        assert_eq!(chain.flats()[2].len(), 3);
    }

    #[test]
    fn dual_k33_is_not_supersolvable() {
        assert!(find_mchain(&dual_k33()).unwrap().is_none());
        assert!(all_mchains(&dual_k33()).unwrap().is_empty());
    }

    #[test]
    fn c5_is_not_supersolvable() {
        let m = cycle_matroid(&cycle_graph(5)).unwrap();
        assert!(all_mchains(&m).unwrap().is_empty());
    }

    #[test]
    fn k4_has_twelve_chains() {
        let m = cycle_matroid(&complete_graph(4)).unwrap();
        let chains = all_mchains(&m).unwrap();
        assert_eq!(chains.len(), 12);
        for c in &chains {
            validate_mchain(&m, c).unwrap();
        }
        assert!(chains.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn single_line_has_three_chains() {
        let m = cycle_matroid(&cycle_graph(3)).unwrap();
        let chains = all_mchains(&m).unwrap();
        assert_eq!(chains.len(), 3);
        for (i, c) in chains.iter().enumerate() {
            assert_eq!(c.flats()[1], ElementSet::singleton(i));
        }
    }

    #[test]
    fn partition_of_g0_chain() {
        let p = mpartition(&g0_example_chain());
        assert_eq!(
            p.blocks(),
            &[
                labels(&[1]),
                labels(&[2, 3]),
                labels(&[4, 5]),
                labels(&[6, 7])
            ]
        );
        let union = p
            .blocks()
            .iter()
            .fold(ElementSet::empty(), |a, &b| a.union(b));
        assert_eq!(union, ElementSet::full(7));
    }

    #[test]
    fn partition_of_fano_chain() {
        let m = fano();
        let chain = find_mchain(&m).unwrap().unwrap();
        let p = mpartition(&chain);
        let sizes: Vec<usize> = p.blocks().iter().map(|b| b.len()).collect();
        assert_eq!(sizes, vec![1, 2, 4]);
    }

    #[test]
    fn restrict_chain_examples() {
        let m = g0();
        let chain = g0_example_chain();

        let whole = Flat {
            elements: ElementSet::full(7),
            rank: 4,
        };
        assert_eq!(restrict_chain(&m, &chain, &whole).unwrap(), chain);

        let hyper = m.closure(labels(&[1, 2, 3, 4, 5]));
        let cut = restrict_chain(&m, &chain, &hyper).unwrap();
        assert_eq!(
            cut.flats(),
            &[
                ElementSet::empty(),
                labels(&[1]),
                labels(&[1, 2, 3]),
                labels(&[1, 2, 3, 4, 5])
            ]
        );

        let bottom = m.closure(ElementSet::empty());
        let trivial = restrict_chain(&m, &chain, &bottom).unwrap();
        assert_eq!(trivial.flats(), &[ElementSet::empty()]);
    }

    #[test]
    fn elementary_deformation_cases() {
        let m = g0();
        let chains = all_mchains(&m).unwrap();
        let c = g0_example_chain();
        assert!(is_elementary_deformation(&c, &c).unwrap());

        // Same chain except the rank-1 flat: {3} also sits below {1,2,3}.
        let other = MChain::new(vec![
            ElementSet::empty(),
            labels(&[3]),
            labels(&[1, 2, 3]),
            labels(&[1, 2, 3, 4, 5]),
            ElementSet::full(7),
        ]);
        assert!(chains.contains(&other));
        assert!(is_elementary_deformation(&c, &other).unwrap());

        // Differ in two intermediate flats: not elementary.
        let far = MChain::new(vec![
            ElementSet::empty(),
            labels(&[4]),
            labels(&[3, 4, 5]),
            labels(&[1, 2, 3, 4, 5]),
            ElementSet::full(7),
        ]);
        assert!(chains.contains(&far));
        assert!(!is_elementary_deformation(&c, &far).unwrap());
    }

    #[test]
    fn deformation_path_examples() {
        let m = g0();
        let c = g0_example_chain();
        assert_eq!(deformation_path(&m, &c, &c).unwrap(), vec![c.clone()]);

        // Chain generating the partition {4} | {3,5} | {1,2} | {6,7}.
        let primed = MChain::new(vec![
            ElementSet::empty(),
            labels(&[4]),
            labels(&[3, 4, 5]),
            labels(&[1, 2, 3, 4, 5]),
            ElementSet::full(7),
        ]);
        assert_eq!(
            mpartition(&primed).blocks(),
            &[
                labels(&[4]),
                labels(&[3, 5]),
                labels(&[1, 2]),
                labels(&[6, 7])
            ]
        );
        let path = deformation_path(&m, &c, &primed).unwrap();
        assert_eq!(path.first(), Some(&c));
        assert_eq!(path.last(), Some(&primed));
        for w in path.windows(2) {
            assert!(is_elementary_deformation(&w[0], &w[1]).unwrap());
        }
    }

    #[test]
    fn deformation_paths_connect_all_k4_chains() {
        let m = cycle_matroid(&complete_graph(4)).unwrap();
        let chains = all_mchains(&m).unwrap();
        let first = &chains[0];
        for other in &chains {
            let path = deformation_path(&m, first, other).unwrap();
            assert_eq!(path.last(), Some(other));
        }
    }

    #[test]
    fn supersolvable_requires_simple() {
        let loopy = BinaryMatroid::from_matrix(
            crate::gf2::Gf2Matrix::from_row_bits(vec![0b01], 2).unwrap(),
        );
        assert!(matches!(find_mchain(&loopy), Err(Error::NotSimple)));
    }
}
