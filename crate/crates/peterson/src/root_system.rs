//! Finite crystallographic root systems: Cartan data, positive roots, and
//! classification of simple-root subsets by Dynkin type.
//!
//! Simple roots are indexed 1 through the rank. Diagram conventions: the
//! A, B, C chains run 1..n with the short root of B and the long root of C
//! at position n; the D chain runs 1..n-1 with node n attached to n-2; the
//! E chain is 1-3-4-...-n with node 2 attached to 4; F4 is the chain
//! 1-2-3-4 with the arrow from 2 to 3; G2 has its arrow from 2 to 1.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The seven families of finite crystallographic root systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// All families, in alphabetical order.
pub const FAMILIES: [Family; 7] = [
    Family::A,
    Family::B,
    Family::C,
    Family::D,
    Family::E,
    Family::F,
    Family::G,
];

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }

    /// Rank constraints that keep the Dynkin diagrams distinct across
    /// families: B and C start at rank 2, D at rank 4, E covers 6 through
    /// 8, and F4 and G2 are fixed.
    pub fn valid_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    fn allowed_ranks(self) -> &'static str {
        match self {
            Family::A => "n >= 1",
            Family::B | Family::C => "n >= 2",
            Family::D => "n >= 4",
            Family::E => "6, 7, 8",
            Family::F => "4",
            Family::G => "2",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A family letter with a rank, e.g. `C3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<LieType> {
        if family.valid_rank(rank) {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
                allowed: family.allowed_ranks(),
            })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Parses notation like `"C3"` or `"e8"`.
    pub fn parse(s: &str) -> Result<LieType> {
        let t = s.trim();
        let mut chars = t.chars();
        let letter = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::UnknownType(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        LieType::new(letter, rank)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<LieType> {
        LieType::parse(s)
    }
}

/// An element of the root lattice, written in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Root {
        Root { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Sum of the simple-root coefficients.
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// True for a nonzero root whose coefficients are all nonnegative.
    /// Every root of a finite root system is either positive or negative.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().all(|&c| c <= 0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let mag = c.unsigned_abs();
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "a{}", idx + 1)?;
            first = false;
        }
        Ok(())
    }
}

/// One connected component of a simple-root subset, identified with the
/// standard root system of the same Dynkin type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    lie_type: LieType,
    index_map: Vec<usize>,
}

impl Component {
    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    /// `index_map()[k]` is the ambient simple-root index playing the role
    /// of standard simple root `k + 1` in the component's type.
    pub fn index_map(&self) -> &[usize] {
        &self.index_map
    }

    pub fn size(&self) -> usize {
        self.index_map.len()
    }
}

/// A subset of the simple roots together with its decomposition into
/// connected Dynkin components.
///
/// The indices are 1-based and sorted; the components are ordered by their
/// smallest ambient index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleSubset {
    indices: Vec<usize>,
    components: Vec<Component>,
}

impl SimpleSubset {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn size(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }
}

/// Builds the root system of the given type.
pub fn build_root_system(lie_type: LieType) -> RootSystem {
    RootSystem::new(lie_type)
}

/// A root system with its Cartan matrix and full list of positive roots.
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    positive: Vec<Root>,
}

impl RootSystem {
    pub fn new(lie_type: LieType) -> RootSystem {
        let cartan = cartan_matrix(lie_type);
        let positive = positive_roots_of(&cartan);
        RootSystem {
            lie_type,
            cartan,
            positive,
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    /// The Cartan pairing `<alpha_j, alpha_i^vee>` with 1-based indices.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn simple_root(&self, i: usize) -> Result<Root> {
        self.check_index(i)?;
        let mut coeffs = vec![0i64; self.rank()];
        coeffs[i - 1] = 1;
        Ok(Root::new(coeffs))
    }

    /// The simple reflection `s_i(r) = r - <r, alpha_i^vee> alpha_i`.
    pub fn reflect(&self, i: usize, r: &Root) -> Result<Root> {
        self.check_index(i)?;
        if r.coeffs().len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: r.coeffs().len(),
            });
        }
        let pairing: i64 = (0..self.rank())
            .map(|j| self.cartan[i - 1][j] * r.coeffs()[j])
            .sum();
        let mut coeffs = r.coeffs().to_vec();
        coeffs[i - 1] -= pairing;
        Ok(Root::new(coeffs))
    }

    /// All positive roots, sorted by height and then by coefficients.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if (1..=self.rank()).contains(&i) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    /// Validates a list of 1-based simple-root indices and returns it
    /// sorted ascending.
    pub(crate) fn check_subset(&self, indices: &[usize]) -> Result<Vec<usize>> {
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateIndex(pair[0]));
            }
        }
        for &i in &sorted {
            self.check_index(i)?;
        }
        Ok(sorted)
    }

    /// Splits a subset of simple roots into connected components and
    /// identifies each component with a standard root system.
    ///
    /// Candidate types are tried with the ambient family first, then
    /// alphabetically; among the Cartan isomorphisms onto the chosen type,
    /// ties are broken by preferring maps that send the ambient branch
    /// node (node n in type D, node 2 in type E) to the standard branch
    /// node, then by the lexicographically smallest index map.
    pub fn classify_subset(&self, indices: &[usize]) -> Result<SimpleSubset> {
        let indices = self.check_subset(indices)?;
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut components = Vec::new();
        for &start in &indices {
            if seen.contains(&start) {
                continue;
            }
            let mut nodes = vec![start];
            let mut queue = vec![start];
            seen.insert(start);
            while let Some(a) = queue.pop() {
                for &b in &indices {
                    if !seen.contains(&b) && self.cartan(a, b) != 0 {
                        seen.insert(b);
                        nodes.push(b);
                        queue.push(b);
                    }
                }
            }
            nodes.sort_unstable();
            components.push(self.classify_component(&nodes)?);
        }
        Ok(SimpleSubset {
            indices,
            components,
        })
    }

    fn classify_component(&self, nodes: &[usize]) -> Result<Component> {
        let k = nodes.len();
        let mut families = vec![self.lie_type.family()];
        for f in FAMILIES {
            if !families.contains(&f) {
                families.push(f);
            }
        }
        for family in families {
            let Ok(target) = LieType::new(family, k) else {
                continue;
            };
            let target_cartan = cartan_matrix(target);
            let isos = self.cartan_isomorphisms(&target_cartan, nodes);
            if isos.is_empty() {
                continue;
            }
            let preferred_image = match (above_node(target), above_node(self.lie_type)) {
                (Some(ta), Some(aa)) if nodes.contains(&aa) => Some((ta, aa)),
                _ => None,
            };
            let index_map = isos
                .into_iter()
                .min_by_key(|f| {
                    let respects = match preferred_image {
                        Some((ta, aa)) => f[ta - 1] == aa,
                        None => true,
                    };
                    (!respects, f.clone())
                })
                .expect("non-empty isomorphism list");
            return Ok(Component {
                lie_type: target,
                index_map,
            });
        }
        Err(Error::Verification(format!(
            "component {nodes:?} matches no Dynkin type"
        )))
    }

    /// All bijections from standard indices `1..=k` onto `nodes` under
    /// which the standard Cartan matrix equals the ambient submatrix.
    fn cartan_isomorphisms(&self, target: &[Vec<i64>], nodes: &[usize]) -> Vec<Vec<usize>> {
        let k = target.len();
        let mut used = vec![false; k];
        let mut assign: Vec<usize> = Vec::with_capacity(k);
        let mut out = Vec::new();
        self.isomorphism_search(target, nodes, &mut used, &mut assign, &mut out);
        debug_assert!(assign.is_empty() && used.iter().all(|&u| !u));
        out
    }

    fn isomorphism_search(
        &self,
        target: &[Vec<i64>],
        nodes: &[usize],
        used: &mut Vec<bool>,
        assign: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let k = target.len();
        let p = assign.len();
        if p == k {
            out.push(assign.clone());
            return;
        }
        for pos in 0..k {
            if used[pos] {
                continue;
            }
            let cand = nodes[pos];
            let compatible = (0..p).all(|q| {
                target[p][q] == self.cartan(cand, assign[q])
                    && target[q][p] == self.cartan(assign[q], cand)
            });
            if !compatible {
                continue;
            }
            used[pos] = true;
            assign.push(cand);
            self.isomorphism_search(target, nodes, used, assign, out);
            assign.pop();
            used[pos] = false;
        }
    }
}

/// The node hanging above the chain, if the diagram has one: node n in
/// type D, node 2 in type E.
fn above_node(t: LieType) -> Option<usize> {
    match t.family() {
        Family::D => Some(t.rank()),
        Family::E => Some(2),
        _ => None,
    }
}

/// The Cartan matrix of the standard system, 0-based storage with
/// `m[i][j] = <alpha_{j+1}, alpha_{i+1}^vee>`.
pub(crate) fn cartan_matrix(t: LieType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    fn link(m: &mut [Vec<i64>], a: usize, b: usize) {
        m[a][b] = -1;
        m[b][a] = -1;
    }
    match t.family() {
        Family::A => {
            for i in 1..n {
                link(&mut m, i - 1, i);
            }
        }
        Family::B => {
            for i in 1..n {
                link(&mut m, i - 1, i);
            }
            m[n - 1][n - 2] = -2;
        }
        Family::C => {
            for i in 1..n {
                link(&mut m, i - 1, i);
            }
            m[n - 2][n - 1] = -2;
        }
        Family::D => {
            for i in 1..n - 1 {
                link(&mut m, i - 1, i);
            }
            link(&mut m, n - 3, n - 1);
        }
        Family::E => {
            link(&mut m, 0, 2);
            for i in 2..n - 1 {
                link(&mut m, i, i + 1);
            }
            link(&mut m, 1, 3);
        }
        Family::F => {
            link(&mut m, 0, 1);
            link(&mut m, 1, 2);
            link(&mut m, 2, 3);
            m[2][1] = -2;
        }
        Family::G => {
            m[0][1] = -3;
            m[1][0] = -1;
        }
    }
    m
}

/// Closes the simple roots under the simple reflections, keeping the
/// positive images. For a finite system this terminates with the full set
/// of positive roots.
fn positive_roots_of(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let mut set: BTreeSet<Vec<i64>> = BTreeSet::new();
    for i in 0..n {
        let mut unit = vec![0i64; n];
        unit[i] = 1;
        set.insert(unit);
    }
    loop {
        let mut added: Vec<Vec<i64>> = Vec::new();
        for c in &set {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| cartan[i][j] * c[j]).sum();
                let mut image = c.clone();
                image[i] -= pairing;
                if image.iter().all(|&x| x >= 0)
                    && image.iter().any(|&x| x > 0)
                    && !set.contains(&image)
                {
                    added.push(image);
                }
            }
        }
        if added.is_empty() {
            break;
        }
        set.extend(added);
    }
    let mut roots: Vec<Root> = set.into_iter().map(Root::new).collect();
    roots.sort_by(|a, b| (a.height(), a.coeffs()).cmp(&(b.height(), b.coeffs())));
    roots
}
