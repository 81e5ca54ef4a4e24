//! Universes, subsets as bit-vectors, and validated infra-topologies.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest supported universe; subsets are single-word bit-vectors.
pub const MAX_UNIVERSE: usize = 62;

/// Errors from universe and subset construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("universe of size {size} exceeds the supported maximum {max}")]
    UniverseTooLarge { size: usize, max: usize },
    #[error("operands belong to different universes")]
    UniverseMismatch,
    #[error("spaces disagree on the generalized flag")]
    FlagMismatch,
    #[error("scan over all subsets needs a universe of at most {max} elements, got {size}")]
    UniverseTooLargeForScan { size: usize, max: usize },
}

/// Why a candidate family is not an infra-topology.
///
/// For closure failures the offending pair is reported: both sets are in the
/// family but their intersection is not.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ViolationReport {
    #[error("the empty set is not a member of the family")]
    MissingEmpty,
    #[error("the whole universe is not a member of the family")]
    MissingUniverse,
    #[error("family is not intersection-closed: {a} and {b} are members but {a} ∩ {b} is not")]
    NotIntersectionClosed { a: Subset, b: Subset },
}

#[derive(Debug, PartialEq, Eq)]
struct UniverseData {
    names: Vec<String>,
}

/// A fixed finite ground set with ordered, distinct element labels.
#[derive(Clone)]
pub struct Universe {
    inner: Arc<UniverseData>,
}

impl Universe {
    /// Builds a universe from labels, keeping the input order as the index
    /// order. The empty universe is allowed (there the empty set equals the
    /// whole space).
    pub fn new<I, S>(labels: I) -> Result<Universe, SpaceError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = labels.into_iter().map(Into::into).collect();
        if names.len() > MAX_UNIVERSE {
            return Err(SpaceError::UniverseTooLarge { size: names.len(), max: MAX_UNIVERSE });
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(SpaceError::DuplicateLabel(name.clone()));
            }
        }
        Ok(Universe { inner: Arc::new(UniverseData { names }) })
    }

    /// Universe `a, b, c, ...` of the given size; handy for enumeration and
    /// worked examples.
    pub fn alphabetic(n: usize) -> Universe {
        assert!(n <= 26, "alphabetic universe supports at most 26 elements");
        Universe::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string()))
            .expect("letters are distinct")
    }

    pub fn size(&self) -> usize {
        self.inner.names.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.names
    }

    pub fn label(&self, index: usize) -> &str {
        &self.inner.names[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.inner.names.iter().position(|n| n == label)
    }

    /// The subset with no members.
    pub fn empty_set(&self) -> Subset {
        Subset { universe: self.clone(), bits: 0 }
    }

    /// The subset containing every element.
    pub fn full_set(&self) -> Subset {
        Subset { universe: self.clone(), bits: self.full_mask() }
    }

    pub fn singleton(&self, index: usize) -> Subset {
        assert!(index < self.size());
        Subset { universe: self.clone(), bits: 1 << index }
    }

    /// Builds a subset from element labels; duplicates are ignored.
    pub fn subset<I, S>(&self, members: I) -> Result<Subset, SpaceError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = 0u64;
        for label in members {
            let label = label.as_ref();
            match self.index_of(label) {
                Some(i) => bits |= 1 << i,
                None => return Err(SpaceError::UnknownLabel(label.to_string())),
            }
        }
        Ok(Subset { universe: self.clone(), bits })
    }

    /// Subset from a raw characteristic mask; bits beyond the universe size
    /// must be clear.
    pub fn subset_from_bits(&self, bits: u64) -> Subset {
        assert_eq!(bits & !self.full_mask(), 0, "mask has bits outside the universe");
        Subset { universe: self.clone(), bits }
    }

    /// All subsets in canonical (ascending bit-value) order. Guarded so a
    /// 2^n walk is never attempted on a large universe.
    pub fn all_subsets(&self) -> Result<impl Iterator<Item = Subset> + '_, SpaceError> {
        const SCAN_MAX: usize = 20;
        if self.size() > SCAN_MAX {
            return Err(SpaceError::UniverseTooLargeForScan { size: self.size(), max: SCAN_MAX });
        }
        Ok((0..=self.full_mask()).map(move |bits| self.subset_from_bits(bits)))
    }

    pub fn full_mask(&self) -> u64 {
        if self.size() == 0 {
            0
        } else {
            (1u64 << self.size()) - 1
        }
    }

    pub fn same_as(&self, other: &Universe) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Universe {}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Universe({:?})", self.inner.names)
    }
}

/// A subset of a [`Universe`], stored as a characteristic bit-vector.
///
/// Bit `i` is set exactly when element `i` is a member. All set arithmetic
/// requires both operands to come from the same universe.
#[derive(Clone)]
pub struct Subset {
    universe: Universe,
    bits: u64,
}

impl Subset {
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.universe.size() && self.bits & (1 << index) != 0
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.check_universe(other);
        self.bits & !other.bits == 0
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        self.check_universe(other);
        Subset { universe: self.universe.clone(), bits: self.bits & other.bits }
    }

    pub fn union(&self, other: &Subset) -> Subset {
        self.check_universe(other);
        Subset { universe: self.universe.clone(), bits: self.bits | other.bits }
    }

    pub fn complement(&self) -> Subset {
        Subset { universe: self.universe.clone(), bits: !self.bits & self.universe.full_mask() }
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe.size()).filter(move |i| self.bits & (1 << i) != 0)
    }

    pub fn member_labels(&self) -> Vec<&str> {
        self.indices().map(|i| self.universe.label(i)).collect()
    }

    fn check_universe(&self, other: &Subset) {
        assert!(
            self.universe.same_as(&other.universe),
            "set operation across different universes"
        );
    }
}

impl PartialEq for Subset {
    fn eq(&self, other: &Self) -> bool {
        self.universe.same_as(&other.universe) && self.bits == other.bits
    }
}

impl Eq for Subset {}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: ascending characteristic bit value.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.bits.cmp(&other.bits)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        if self.bits == self.universe.full_mask() && self.universe.size() > 0 {
            return write!(f, "X");
        }
        write!(f, "{{{}}}", self.member_labels().join(","))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A validated (generalized) infra-topology: members contain the empty set,
/// contain the universe unless `generalized`, and are closed under pairwise
/// intersection. Members are deduplicated and kept in canonical order, so
/// equal spaces compare and serialize identically.
#[derive(Clone, PartialEq, Eq)]
pub struct InfraTopology {
    universe: Universe,
    members: Vec<Subset>,
    generalized: bool,
}

impl InfraTopology {
    /// Checks the defining clauses and returns the canonical space, or a
    /// report naming the violated clause. Closure failures carry a witness
    /// pair in canonical order.
    pub fn validate(
        universe: &Universe,
        family: &[Subset],
        generalized: bool,
    ) -> Result<InfraTopology, ViolationReport> {
        let mut members: Vec<Subset> = family
            .iter()
            .map(|s| {
                assert!(
                    s.universe().same_as(universe),
                    "family member from a different universe"
                );
                s.clone()
            })
            .collect();
        members.sort();
        members.dedup();

        if members.first().map_or(true, |s| !s.is_empty()) {
            return Err(ViolationReport::MissingEmpty);
        }
        if !generalized && members.last().map_or(true, |s| s.bits() != universe.full_mask()) {
            return Err(ViolationReport::MissingUniverse);
        }
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                let meet = a.bits() & b.bits();
                if members.binary_search_by(|m| m.bits().cmp(&meet)).is_err() {
                    return Err(ViolationReport::NotIntersectionClosed {
                        a: a.clone(),
                        b: b.clone(),
                    });
                }
            }
        }
        Ok(InfraTopology { universe: universe.clone(), members, generalized })
    }

    /// The least infra-topology containing all seeds: adds the forced
    /// members and closes under pairwise intersection to a fixed point.
    pub fn generate(universe: &Universe, seeds: &[Subset], generalized: bool) -> InfraTopology {
        let mut bits: Vec<u64> = seeds
            .iter()
            .map(|s| {
                assert!(s.universe().same_as(universe), "seed from a different universe");
                s.bits()
            })
            .collect();
        bits.push(0);
        if !generalized {
            bits.push(universe.full_mask());
        }
        bits.sort_unstable();
        bits.dedup();

        // Pairwise closure; each pass only needs pairs involving the newly
        // added sets.
        let mut frontier = bits.clone();
        while !frontier.is_empty() {
            let mut fresh = Vec::new();
            for &a in &frontier {
                for &b in &bits {
                    let meet = a & b;
                    if bits.binary_search(&meet).is_err() && !fresh.contains(&meet) {
                        fresh.push(meet);
                    }
                }
            }
            bits.extend_from_slice(&fresh);
            bits.sort_unstable();
            bits.dedup();
            frontier = fresh;
        }

        let members = bits.into_iter().map(|b| universe.subset_from_bits(b)).collect();
        InfraTopology { universe: universe.clone(), members, generalized }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Members in canonical order.
    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn generalized(&self) -> bool {
        self.generalized
    }

    pub fn contains(&self, set: &Subset) -> bool {
        self.universe.same_as(set.universe()) && self.contains_bits(set.bits())
    }

    pub fn contains_bits(&self, bits: u64) -> bool {
        self.members.binary_search_by(|m| m.bits().cmp(&bits)).is_ok()
    }

    /// The union of all members; in a model this is the open-covered part
    /// of the universe.
    pub fn union_of_members(&self) -> Subset {
        let bits = self.members.iter().fold(0u64, |acc, m| acc | m.bits());
        self.universe.subset_from_bits(bits)
    }

    /// Closure under arbitrary intersections. On a finite universe any
    /// intersection of a nonempty subfamily is a fold of pairwise
    /// intersections, so a validated space is always Alexandrov; the method
    /// exists to document that fact in API form.
    pub fn is_alexandrov(&self) -> bool {
        true
    }
}

impl fmt::Display for InfraTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.members.iter().map(|m| m.to_string()).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

impl fmt::Debug for InfraTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InfraTopology({self}, generalized={})", self.generalized)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subsets(u: &Universe, lists: &[&[&str]]) -> Vec<Subset> {
        lists.iter().map(|ls| u.subset(ls.iter().copied()).unwrap()).collect()
    }

    #[test]
    fn universe_keeps_input_order() {
        let u = Universe::new(["a", "b", "c"]).unwrap();
        assert_eq!(u.size(), 3);
        assert_eq!(u.index_of("b"), Some(1));
    }

    #[test]
    fn duplicate_label_is_rejected() {
        assert_eq!(
            Universe::new(["a", "a"]).unwrap_err(),
            SpaceError::DuplicateLabel("a".into())
        );
    }

    #[test]
    fn empty_universe_is_allowed() {
        let u = Universe::new(Vec::<String>::new()).unwrap();
        assert_eq!(u.size(), 0);
        assert_eq!(u.empty_set(), u.full_set());
        let t = InfraTopology::validate(&u, &[u.empty_set()], false).unwrap();
        assert_eq!(t.members().len(), 1);
    }

    #[test]
    fn subset_from_labels() {
        let u = Universe::new(["a", "b", "c"]).unwrap();
        let s = u.subset(["a", "b"]).unwrap();
        assert_eq!(s.bits(), 0b011);
        assert_eq!(u.subset(Vec::<String>::new()).unwrap().bits(), 0);
        assert_eq!(
            u.subset(["z"]).unwrap_err(),
            SpaceError::UnknownLabel("z".into())
        );
        // duplicates in the input are ignored
        assert_eq!(u.subset(["a", "a", "b"]).unwrap(), s);
    }

    #[test]
    fn validate_accepts_the_three_element_space() {
        let u = Universe::alphabetic(3);
        let family = subsets(&u, &[&[], &["a", "b", "c"], &["a"], &["b"]]);
        let t = InfraTopology::validate(&u, &family, false).unwrap();
        assert_eq!(t.members().len(), 4);
        assert!(t.contains(&u.subset(["a"]).unwrap()));
    }

    #[test]
    fn validate_reports_first_closure_witness() {
        // Union of the two four-element example spaces; {a,b} ∩ {b,c} = {b}
        // is missing.
        let u = Universe::alphabetic(4);
        let family = subsets(
            &u,
            &[
                &[],
                &["a", "b", "c", "d"],
                &["a"],
                &["c"],
                &["d"],
                &["a", "b"],
                &["a", "c"],
                &["b", "c"],
                &["c", "d"],
            ],
        );
        let err = InfraTopology::validate(&u, &family, false).unwrap_err();
        assert_eq!(
            err,
            ViolationReport::NotIntersectionClosed {
                a: u.subset(["a", "b"]).unwrap(),
                b: u.subset(["b", "c"]).unwrap(),
            }
        );
    }

    #[test]
    fn validate_missing_clauses() {
        let u = Universe::alphabetic(2);
        let err = InfraTopology::validate(&u, &[u.full_set()], false).unwrap_err();
        assert_eq!(err, ViolationReport::MissingEmpty);
        let err = InfraTopology::validate(&u, &[u.empty_set()], false).unwrap_err();
        assert_eq!(err, ViolationReport::MissingUniverse);
        // generalized spaces waive only the universe clause
        let t = InfraTopology::validate(&u, &[u.empty_set()], true).unwrap();
        assert!(t.generalized());
        assert_eq!(t.members().len(), 1);
    }

    #[test]
    fn minimal_generalized_space_on_one_world() {
        let u = Universe::new(["w"]).unwrap();
        let t = InfraTopology::validate(&u, &[u.empty_set()], true).unwrap();
        assert_eq!(t.members(), &[u.empty_set()]);
    }

    #[test]
    fn generate_reproduces_the_seeded_example() {
        // Seeds {a,b},{b,c} over a 4-element universe close up to the
        // five-member example family.
        let u = Universe::alphabetic(4);
        let seeds = subsets(&u, &[&["a", "b"], &["b", "c"]]);
        let t = InfraTopology::generate(&u, &seeds, false);
        let expect = subsets(&u, &[&[], &["b"], &["a", "b"], &["b", "c"], &["a", "b", "c", "d"]]);
        let expect = InfraTopology::validate(&u, &expect, false).unwrap();
        assert_eq!(t, expect);
    }

    #[test]
    fn generate_without_seeds_is_indiscrete() {
        let u = Universe::alphabetic(3);
        let t = InfraTopology::generate(&u, &[], false);
        assert_eq!(t.members().len(), 2);
    }

    #[test]
    fn generate_is_idempotent_on_valid_families() {
        let u = Universe::alphabetic(4);
        let family = subsets(&u, &[&[], &["a", "b", "c", "d"], &["a"], &["c"], &["a", "b"], &["a", "c"]]);
        let t = InfraTopology::validate(&u, &family, false).unwrap();
        let regenerated = InfraTopology::generate(&u, t.members(), false);
        assert_eq!(t, regenerated);
    }

    #[test]
    fn validated_space_is_alexandrov() {
        let u = Universe::alphabetic(3);
        let t = InfraTopology::generate(&u, &[u.subset(["a"]).unwrap()], false);
        assert!(t.is_alexandrov());
    }
}
