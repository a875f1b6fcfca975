//! Peterson Schubert classes: the fixed-point basis, Monk structure
//! constants, Giambelli constants, and the non-integrality scan.
//!
//! The fixed points are indexed by subsets `K` of the simple roots, via
//! the longest element `w_K` of the parabolic subgroup `W_K`. The class
//! attached to `K` is the Peterson Schubert class of the canonical
//! Coxeter element `v_K`; its localizations `p_{v_K}(w_J)` form a matrix
//! that is triangular with respect to inclusion of subsets. Subsets are
//! always enumerated by cardinality and then lexicographically.

use std::cell::RefCell;
use std::collections::HashMap;

use num::{BigInt, BigRational, BigUint, One, Signed, Zero};

use crate::billey::{specialized_sum, HeightList, TMonomial};
use crate::error::{Error, Result};
use crate::root_system::{LieType, RootSystem, SimpleSubset};
use crate::weyl::{WeylElement, Word};
use crate::words;

/// Largest rank for which the full fixed-point set is enumerated.
pub const MAX_PETERSON_RANK: usize = 8;

impl RootSystem {
    /// The canonical Coxeter word of the parabolic subgroup `W_K`: per
    /// component, the ambient letters in standard-index order of the
    /// component's classification; components in ascending order of
    /// smallest ambient index.
    pub fn coxeter_word(&self, subset: &SimpleSubset) -> Word {
        let mut out = Vec::with_capacity(subset.size());
        for comp in subset.components() {
            out.extend_from_slice(comp.index_map());
        }
        out
    }

    /// The localization `p_{v_J}(w_K)`, computed from scratch. Use a
    /// [`Peterson`] context when many values are needed.
    pub fn localization(&self, j: &[usize], k: &[usize]) -> Result<TMonomial> {
        let j_subset = self.classify_subset(j)?;
        let k_indices = self.check_subset(k)?;
        if !contains_all(&k_indices, j_subset.indices()) {
            return Ok(TMonomial::zero());
        }
        let w_k = self.longest_element(&k_indices)?;
        let word = self.canonical_word(&w_k);
        let v = self.element_of(&self.coxeter_word(&j_subset))?;
        self.billey_specialized(&v, &word)
    }
}

fn contains_all(big: &[usize], small: &[usize]) -> bool {
    small.iter().all(|x| big.binary_search(x).is_ok())
}

/// One Peterson Schubert class with its full localization column.
#[derive(Clone, Debug)]
pub struct PetersonClass {
    subset: SimpleSubset,
    word: Word,
    element: WeylElement,
    localizations: Vec<(SimpleSubset, TMonomial)>,
}

impl PetersonClass {
    pub fn subset(&self) -> &SimpleSubset {
        &self.subset
    }

    /// The canonical Coxeter word `v_K`.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn element(&self) -> &WeylElement {
        &self.element
    }

    /// Localizations at every fixed point, in subset order.
    pub fn localizations(&self) -> &[(SimpleSubset, TMonomial)] {
        &self.localizations
    }
}

/// The full localization matrix: rows are fixed points `w_K`, columns
/// are classes `p_{v_J}`, both in subset order.
#[derive(Clone, Debug)]
pub struct BasisTable {
    lie_type: LieType,
    subsets: Vec<SimpleSubset>,
    matrix: Vec<Vec<TMonomial>>,
}

impl BasisTable {
    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn subsets(&self) -> &[SimpleSubset] {
        &self.subsets
    }

    pub fn matrix(&self) -> &[Vec<TMonomial>] {
        &self.matrix
    }

    /// Entry at fixed-point row `point` and class column `class`.
    pub fn entry(&self, point: usize, class: usize) -> &TMonomial {
        &self.matrix[point][class]
    }
}

/// One superset term of a Monk expansion.
#[derive(Clone, Debug)]
pub struct MonkTerm {
    pub subset: SimpleSubset,
    pub coeff: BigRational,
}

/// The expansion of `p_{s_i} * p_{v_K}` over the class basis: a diagonal
/// monomial times `p_{v_K}` plus rational multiples of the classes of
/// the codimension-one supersets of `K`.
#[derive(Clone, Debug)]
pub struct MonkExpansion {
    i: usize,
    subset: SimpleSubset,
    diagonal: TMonomial,
    terms: Vec<MonkTerm>,
}

impl MonkExpansion {
    pub fn i(&self) -> usize {
        self.i
    }

    pub fn subset(&self) -> &SimpleSubset {
        &self.subset
    }

    /// The coefficient of `p_{v_K}` itself, equal to `p_{s_i}(w_K)`.
    pub fn diagonal(&self) -> &TMonomial {
        &self.diagonal
    }

    /// All terms for supersets `J = K + one index`, in subset order,
    /// zero coefficients included.
    pub fn terms(&self) -> &[MonkTerm] {
        &self.terms
    }
}

/// One connected component's contribution to a Giambelli constant.
#[derive(Clone, Debug)]
pub struct ComponentFactor {
    pub indices: Vec<usize>,
    pub lie_type: LieType,
    pub factorial: BigUint,
    pub reduced_words: usize,
}

/// The constant `C_K` with `C_K * p_{v_K} = prod of p_{s_i}` over `K`,
/// together with its per-component factorization.
#[derive(Clone, Debug)]
pub struct GiambelliCertificate {
    subset: SimpleSubset,
    constant: BigRational,
    components: Vec<ComponentFactor>,
}

impl GiambelliCertificate {
    pub fn subset(&self) -> &SimpleSubset {
        &self.subset
    }

    pub fn constant(&self) -> &BigRational {
        &self.constant
    }

    pub fn components(&self) -> &[ComponentFactor] {
        &self.components
    }
}

/// One non-integer Monk coefficient found by the scan.
#[derive(Clone, Debug)]
pub struct NonIntegralHit {
    pub i: usize,
    pub base: SimpleSubset,
    pub superset: SimpleSubset,
    pub coeff: BigRational,
}

/// Precomputed fixed-point data for one root system: subsets, reduced
/// words and height lists of the `w_K`, Coxeter data of the `v_K`, and a
/// cache of localizations.
pub struct Peterson<'a> {
    rs: &'a RootSystem,
    subsets: Vec<SimpleSubset>,
    position_of: HashMap<Vec<usize>, usize>,
    point_words: Vec<Word>,
    point_heights: Vec<HeightList>,
    generator_sums: Vec<Vec<BigInt>>,
    class_words: Vec<Word>,
    class_elements: Vec<WeylElement>,
    class_reduced_words: Vec<Vec<Word>>,
    cache: RefCell<HashMap<(usize, usize), TMonomial>>,
}

impl<'a> Peterson<'a> {
    /// Builds the context with canonical reduced words for every `w_K`.
    pub fn new(rs: &'a RootSystem) -> Result<Peterson<'a>> {
        Peterson::build(rs, false)
    }

    /// Builds the context with the bundled reference words for every
    /// `w_K`; each word is checked to multiply to the longest element.
    pub fn with_reference_words(rs: &'a RootSystem) -> Result<Peterson<'a>> {
        Peterson::build(rs, true)
    }

    fn build(rs: &'a RootSystem, reference: bool) -> Result<Peterson<'a>> {
        let rank = rs.rank();
        if rank > MAX_PETERSON_RANK {
            return Err(Error::InvalidArgument(format!(
                "fixed-point enumeration covers rank at most {MAX_PETERSON_RANK}, got rank {rank}"
            )));
        }
        let mut subsets = Vec::with_capacity(1 << rank);
        let mut position_of = HashMap::with_capacity(1 << rank);
        let mut point_words = Vec::with_capacity(1 << rank);
        let mut point_heights = Vec::with_capacity(1 << rank);
        let mut generator_sums = Vec::with_capacity(1 << rank);
        let mut class_words = Vec::with_capacity(1 << rank);
        let mut class_elements = Vec::with_capacity(1 << rank);
        let mut class_reduced_words = Vec::with_capacity(1 << rank);
        for indices in subsets_in_order(rank) {
            let subset = rs.classify_subset(&indices)?;
            let word = if reference {
                words::reference_word(rs, &subset)?
            } else {
                rs.canonical_word(&rs.longest_element(&indices)?)
            };
            let heights = rs.heights_list(&word)?;
            let mut sums = vec![BigInt::zero(); rank];
            for (pos, &letter) in heights.word().iter().enumerate() {
                sums[letter - 1] += heights.heights()[pos];
            }
            let v_word = rs.coxeter_word(&subset);
            let v = rs.element_of(&v_word)?;
            let v_all = rs.all_reduced_words(&v)?;
            position_of.insert(indices, subsets.len());
            subsets.push(subset);
            point_words.push(word);
            point_heights.push(heights);
            generator_sums.push(sums);
            class_words.push(v_word);
            class_elements.push(v);
            class_reduced_words.push(v_all);
        }
        Ok(Peterson {
            rs,
            subsets,
            position_of,
            point_words,
            point_heights,
            generator_sums,
            class_words,
            class_elements,
            class_reduced_words,
            cache: RefCell::new(HashMap::new()),
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rs
    }

    /// All subsets of the simple roots in (cardinality, lex) order.
    pub fn subsets(&self) -> &[SimpleSubset] {
        &self.subsets
    }

    /// Position of a subset in the enumeration order.
    pub fn position(&self, indices: &[usize]) -> Result<usize> {
        let sorted = self.rs.check_subset(indices)?;
        Ok(self.position_of[&sorted])
    }

    /// The fixed points as (subset, reduced word of `w_K`) pairs.
    pub fn fixed_points(&self) -> impl Iterator<Item = (&SimpleSubset, &[usize])> {
        self.subsets
            .iter()
            .zip(self.point_words.iter().map(|w| w.as_slice()))
    }

    /// The reduced word in use for the fixed point at `position`.
    pub fn fixed_point_word(&self, position: usize) -> &[usize] {
        &self.point_words[position]
    }

    /// The canonical Coxeter word `v_K` for the subset at `position`.
    pub fn class_word(&self, position: usize) -> &[usize] {
        &self.class_words[position]
    }

    /// The localization `p_{s_i}(w_K)` at the fixed point at `position`.
    pub fn generator_localization(&self, i: usize, position: usize) -> Result<TMonomial> {
        self.rs.check_index(i)?;
        Ok(TMonomial::from_integer(
            self.generator_sums[position][i - 1].clone(),
            1,
        ))
    }

    /// The localization `p_{v_J}(w_K)` by subset positions, cached.
    pub fn localization_at(&self, class: usize, point: usize) -> TMonomial {
        if !contains_all(self.subsets[point].indices(), self.subsets[class].indices()) {
            return TMonomial::zero();
        }
        let key = (class, point);
        if let Some(hit) = self.cache.borrow().get(&key) {
            return hit.clone();
        }
        let heights = &self.point_heights[point];
        let total = specialized_sum(
            heights.heights(),
            heights.word(),
            &self.class_reduced_words[class],
        );
        let value = TMonomial::from_integer(total, self.subsets[class].size());
        self.cache.borrow_mut().insert(key, value.clone());
        value
    }

    /// The localization `p_{v_J}(w_K)` by ambient index sets.
    pub fn localization(&self, j: &[usize], k: &[usize]) -> Result<TMonomial> {
        Ok(self.localization_at(self.position(j)?, self.position(k)?))
    }

    /// The full localization matrix.
    pub fn basis_table(&self) -> BasisTable {
        let n = self.subsets.len();
        let matrix = (0..n)
            .map(|point| {
                (0..n)
                    .map(|class| self.localization_at(class, point))
                    .collect()
            })
            .collect();
        BasisTable {
            lie_type: self.rs.lie_type(),
            subsets: self.subsets.clone(),
            matrix,
        }
    }

    /// One class with its localization column.
    pub fn class(&self, indices: &[usize]) -> Result<PetersonClass> {
        let pos = self.position(indices)?;
        let localizations = (0..self.subsets.len())
            .map(|point| {
                (
                    self.subsets[point].clone(),
                    self.localization_at(pos, point),
                )
            })
            .collect();
        Ok(PetersonClass {
            subset: self.subsets[pos].clone(),
            word: self.class_words[pos].clone(),
            element: self.class_elements[pos].clone(),
            localizations,
        })
    }

    /// The Monk expansion of `p_{s_i} * p_{v_K}`, with its pointwise
    /// verification at every fixed point. The verification always runs;
    /// a mismatch is a hard error.
    pub fn monk(&self, i: usize, k: &[usize]) -> Result<MonkExpansion> {
        self.rs.check_index(i)?;
        let k_pos = self.position(k)?;
        let diagonal = self.generator_localization(i, k_pos)?;
        let mut terms = Vec::new();
        for j in 1..=self.rs.rank() {
            if self.subsets[k_pos].contains(j) {
                continue;
            }
            let mut indices = self.subsets[k_pos].indices().to_vec();
            let at = indices.partition_point(|&x| x < j);
            indices.insert(at, j);
            let j_pos = self.position_of[&indices];
            let numerator = self
                .generator_localization(i, j_pos)?
                .checked_sub(&diagonal)
                .expect("generator localizations share degree 1")
                .mul(&self.localization_at(k_pos, j_pos));
            let coeff_monomial = numerator
                .checked_div(&self.localization_at(j_pos, j_pos))
                .expect("diagonal localization is nonzero of compatible degree");
            if coeff_monomial.degree() != 0 {
                return Err(Error::Verification(format!(
                    "Monk coefficient for i={i}, J={:?} has degree {}",
                    indices,
                    coeff_monomial.degree()
                )));
            }
            let coeff = coeff_monomial.coeff().clone();
            if coeff.is_negative() {
                return Err(Error::Verification(format!(
                    "Monk coefficient for i={i}, J={indices:?} is negative: {coeff}"
                )));
            }
            terms.push(MonkTerm {
                subset: self.subsets[j_pos].clone(),
                coeff,
            });
        }
        let expansion = MonkExpansion {
            i,
            subset: self.subsets[k_pos].clone(),
            diagonal,
            terms,
        };
        self.verify_monk(&expansion, k_pos)?;
        Ok(expansion)
    }

    fn verify_monk(&self, expansion: &MonkExpansion, k_pos: usize) -> Result<()> {
        let term_positions: Vec<usize> = expansion
            .terms
            .iter()
            .map(|t| self.position_of[t.subset.indices()])
            .collect();
        for point in 0..self.subsets.len() {
            let class_value = self.localization_at(k_pos, point);
            let lhs = self
                .generator_localization(expansion.i, point)?
                .mul(&class_value);
            let mut rhs = expansion.diagonal.mul(&class_value);
            for (term, &j_pos) in expansion.terms.iter().zip(&term_positions) {
                let contribution = self.localization_at(j_pos, point).scale(&term.coeff);
                rhs = rhs.checked_add(&contribution).ok_or_else(|| {
                    Error::Verification(format!(
                        "Monk expansion for i={}, K={:?} mixes degrees at fixed point {:?}",
                        expansion.i,
                        expansion.subset.indices(),
                        self.subsets[point].indices()
                    ))
                })?;
            }
            if lhs != rhs {
                return Err(Error::Verification(format!(
                    "Monk expansion for i={}, K={:?} fails at fixed point {:?}: {} != {}",
                    expansion.i,
                    expansion.subset.indices(),
                    self.subsets[point].indices(),
                    lhs,
                    rhs
                )));
            }
        }
        Ok(())
    }

    /// The Giambelli constant of `K` with its component factorization,
    /// verified at every fixed point. The verification always runs; a
    /// mismatch is a hard error.
    pub fn giambelli(&self, k: &[usize]) -> Result<GiambelliCertificate> {
        let pos = self.position(k)?;
        let subset = &self.subsets[pos];
        let mut constant = BigRational::one();
        let mut components = Vec::new();
        for comp in subset.components() {
            let factorial = (1..=comp.size()).fold(BigUint::one(), |acc, m| acc * BigUint::from(m));
            let v = self.rs.element_of(comp.index_map())?;
            let reduced_words = self.rs.all_reduced_words(&v)?.len();
            constant *=
                BigRational::new(BigInt::from(factorial.clone()), BigInt::from(reduced_words));
            let mut indices = comp.index_map().to_vec();
            indices.sort_unstable();
            components.push(ComponentFactor {
                indices,
                lie_type: comp.lie_type(),
                factorial,
                reduced_words,
            });
        }
        for point in 0..self.subsets.len() {
            let lhs = self.localization_at(pos, point).scale(&constant);
            let mut rhs = TMonomial::one();
            for &i in subset.indices() {
                rhs = rhs.mul(&self.generator_localization(i, point)?);
            }
            if lhs != rhs {
                return Err(Error::Verification(format!(
                    "Giambelli identity for K={:?} fails at fixed point {:?}: {} != {}",
                    subset.indices(),
                    self.subsets[point].indices(),
                    lhs,
                    rhs
                )));
            }
        }
        Ok(GiambelliCertificate {
            subset: subset.clone(),
            constant,
            components,
        })
    }

    /// Every non-integer Monk coefficient over all pairs (i, K), in
    /// subset-then-generator-then-superset order.
    pub fn scan_nonintegral(&self) -> Result<Vec<NonIntegralHit>> {
        let mut hits = Vec::new();
        for k_pos in 0..self.subsets.len() {
            let indices = self.subsets[k_pos].indices().to_vec();
            for i in 1..=self.rs.rank() {
                let expansion = self.monk(i, &indices)?;
                for term in expansion.terms() {
                    if !term.coeff.is_integer() {
                        hits.push(NonIntegralHit {
                            i,
                            base: expansion.subset().clone(),
                            superset: term.subset.clone(),
                            coeff: term.coeff.clone(),
                        });
                    }
                }
            }
        }
        Ok(hits)
    }
}

/// All subsets of `{1..rank}` by cardinality, then lexicographically.
fn subsets_in_order(rank: usize) -> Vec<Vec<usize>> {
    fn extend(
        start: usize,
        rank: usize,
        size: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for i in start..=rank {
            if rank - i + 1 < size - current.len() {
                break;
            }
            current.push(i);
            extend(i + 1, rank, size, current, out);
            current.pop();
        }
    }
    let mut out = Vec::with_capacity(1 << rank);
    for size in 0..=rank {
        extend(1, rank, size, &mut Vec::with_capacity(size), &mut out);
    }
    out
}
