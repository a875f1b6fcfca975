//! Billey's localization formula for Schubert classes and its
//! specialization sending every simple root to the variable t.
//!
//! For a reduced word `w = s_{b_1} ... s_{b_m}` the root at position `j`
//! is `r(j, w) = s_{b_1} ... s_{b_{j-1}}(alpha_{b_j})`, always a positive
//! root. The localization `sigma_v(w)` sums, over every embedding of a
//! reduced word of `v` as a subword of `w`, the product of the roots at
//! the embedded positions. Sending each simple root to t turns the root
//! at position `j` into its height times t, so the specialized value can
//! be accumulated by a subsequence dynamic program over the height list.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};
use crate::root_system::{Root, RootSystem};
use crate::weyl::{WeylElement, Word};

/// Cap on how many terms a symbolic localization polynomial may hold.
pub const POLYNOMIAL_TERM_CAP: usize = 1_000_000;

/// A polynomial in the simple roots with integer coefficients, stored as
/// exponent vectors over `alpha_1..alpha_rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootPolynomial {
    rank: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl RootPolynomial {
    pub fn zero(rank: usize) -> RootPolynomial {
        RootPolynomial {
            rank,
            terms: BTreeMap::new(),
        }
    }

    fn one(rank: usize) -> RootPolynomial {
        let mut p = RootPolynomial::zero(rank);
        p.terms.insert(vec![0; rank], BigInt::one());
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Terms as exponent vector to coefficient, in lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, expo: Vec<u32>, c: BigInt) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(expo).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone());
            if let Some(key) = key {
                self.terms.remove(&key);
            }
        }
        if self.terms.len() > POLYNOMIAL_TERM_CAP {
            return Err(Error::CapExceeded {
                cap: POLYNOMIAL_TERM_CAP,
            });
        }
        Ok(())
    }

    fn add_assign_poly(&mut self, other: &RootPolynomial) -> Result<()> {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone())?;
        }
        Ok(())
    }

    /// Multiplies by a root viewed as a linear form in the simple roots.
    fn mul_linear(&self, root: &Root) -> Result<RootPolynomial> {
        let mut out = RootPolynomial::zero(self.rank);
        for (e, c) in &self.terms {
            for (i, &coeff) in root.coeffs().iter().enumerate() {
                if coeff == 0 {
                    continue;
                }
                let mut expo = e.clone();
                expo[i] += 1;
                out.add_term(expo, c * coeff)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for RootPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let constant = e.iter().all(|&x| x == 0);
            if !c.is_one() || constant {
                write!(f, "{c}")?;
                if !constant {
                    write!(f, " ")?;
                }
            }
            let mut first_var = true;
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if !first_var {
                    write!(f, " ")?;
                }
                first_var = false;
                write!(f, "a{}", i + 1)?;
                if x > 1 {
                    write!(f, "^{x}")?;
                }
            }
        }
        Ok(())
    }
}

/// A monomial `c * t^d` with an exact rational coefficient.
///
/// The zero monomial is normalized to degree 0, so equality of values is
/// plain structural equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TMonomial {
    coeff: BigRational,
    degree: usize,
}

impl TMonomial {
    pub fn new(coeff: BigRational, degree: usize) -> TMonomial {
        if coeff.is_zero() {
            TMonomial { coeff, degree: 0 }
        } else {
            TMonomial { coeff, degree }
        }
    }

    pub fn from_integer(n: BigInt, degree: usize) -> TMonomial {
        TMonomial::new(BigRational::from_integer(n), degree)
    }

    pub fn zero() -> TMonomial {
        TMonomial::new(BigRational::zero(), 0)
    }

    pub fn one() -> TMonomial {
        TMonomial::new(BigRational::one(), 0)
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn mul(&self, other: &TMonomial) -> TMonomial {
        TMonomial::new(&self.coeff * &other.coeff, self.degree + other.degree)
    }

    pub fn scale(&self, factor: &BigRational) -> TMonomial {
        TMonomial::new(&self.coeff * factor, self.degree)
    }

    /// Adds monomials of equal degree; `None` when the degrees differ and
    /// neither side is zero.
    pub fn checked_add(&self, other: &TMonomial) -> Option<TMonomial> {
        if self.is_zero() {
            return Some(other.clone());
        }
        if other.is_zero() {
            return Some(self.clone());
        }
        if self.degree != other.degree {
            return None;
        }
        Some(TMonomial::new(&self.coeff + &other.coeff, self.degree))
    }

    pub fn checked_sub(&self, other: &TMonomial) -> Option<TMonomial> {
        self.checked_add(&TMonomial::new(-other.coeff.clone(), other.degree))
    }

    /// Divides by a nonzero monomial of no larger degree.
    pub fn checked_div(&self, other: &TMonomial) -> Option<TMonomial> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(TMonomial::zero());
        }
        if self.degree < other.degree {
            return None;
        }
        Some(TMonomial::new(
            &self.coeff / &other.coeff,
            self.degree - other.degree,
        ))
    }
}

/// A reduced word together with the height of `r(j, w)` at each position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightList {
    word: Word,
    heights: Vec<i64>,
}

impl HeightList {
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn heights(&self) -> &[i64] {
        &self.heights
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

impl RootSystem {
    fn validate_reduced(&self, word: &[usize]) -> Result<()> {
        if !self.is_reduced(word)? {
            return Err(Error::NotReduced(word.to_vec()));
        }
        Ok(())
    }

    /// The positive roots `r(1, w) ... r(m, w)` of a reduced word.
    pub(crate) fn position_roots(&self, word: &[usize]) -> Result<Vec<Root>> {
        self.validate_reduced(word)?;
        let mut prefix = WeylElement::identity(self.rank());
        let mut out = Vec::with_capacity(word.len());
        for &b in word {
            let r = prefix.apply(&self.simple_root(b)?);
            debug_assert!(r.is_positive(), "position root of a reduced word");
            out.push(r);
            prefix = prefix.compose(&self.simple_reflection(b)?);
        }
        Ok(out)
    }

    /// The root `r(j, w)` used at 1-based position `j` of a reduced word.
    pub fn root_at(&self, word: &[usize], j: usize) -> Result<Root> {
        let roots = self.position_roots(word)?;
        if j == 0 || j > roots.len() {
            return Err(Error::PositionOutOfRange {
                position: j,
                length: roots.len(),
            });
        }
        Ok(roots[j - 1].clone())
    }

    /// The height of `r(j, w)` for every position of a reduced word.
    pub fn heights_list(&self, word: &[usize]) -> Result<HeightList> {
        let roots = self.position_roots(word)?;
        Ok(HeightList {
            word: word.to_vec(),
            heights: roots.iter().map(Root::height).collect(),
        })
    }

    /// The symbolic localization `sigma_v(w)` as a polynomial in the
    /// simple roots, evaluated on the given reduced word for `w`.
    pub fn billey_polynomial(&self, v: &WeylElement, word: &[usize]) -> Result<RootPolynomial> {
        let roots = self.position_roots(word)?;
        let rank = self.rank();
        let lv = self.length(v);
        let mut result = RootPolynomial::zero(rank);
        if lv > word.len() {
            return Ok(result);
        }
        let v_words = self.all_reduced_words(v)?;
        for a in &v_words {
            let mut states: Vec<RootPolynomial> =
                (0..=lv).map(|_| RootPolynomial::zero(rank)).collect();
            states[0] = RootPolynomial::one(rank);
            for (pos, &letter) in word.iter().enumerate() {
                for k in (1..=lv).rev() {
                    if a[k - 1] == letter && !states[k - 1].is_zero() {
                        let product = states[k - 1].mul_linear(&roots[pos])?;
                        states[k].add_assign_poly(&product)?;
                    }
                }
            }
            result.add_assign_poly(&states[lv])?;
        }
        Ok(result)
    }

    /// The specialized localization `p_v(w)`: the image of `sigma_v(w)`
    /// under the map sending every simple root to t.
    pub fn billey_specialized(&self, v: &WeylElement, word: &[usize]) -> Result<TMonomial> {
        let hl = self.heights_list(word)?;
        let lv = self.length(v);
        if lv > word.len() {
            return Ok(TMonomial::zero());
        }
        let v_words = self.all_reduced_words(v)?;
        Ok(TMonomial::from_integer(
            specialized_sum(hl.heights(), hl.word(), &v_words),
            lv,
        ))
    }
}

/// Sums, over every embedding of any of the given words as a subword of
/// `word`, the product of heights at the embedded positions.
///
/// Distinct reduced words of the same element never share an embedding,
/// so summing over them is exactly the sum over all embeddings.
pub(crate) fn specialized_sum(heights: &[i64], word: &[usize], v_words: &[Word]) -> BigInt {
    let mut total = BigInt::zero();
    for a in v_words {
        let l = a.len();
        let mut states: Vec<BigInt> = vec![BigInt::zero(); l + 1];
        states[0] = BigInt::one();
        for (pos, &letter) in word.iter().enumerate() {
            let h = heights[pos];
            for k in (1..=l).rev() {
                if a[k - 1] == letter && !states[k - 1].is_zero() {
                    let add = &states[k - 1] * h;
                    states[k] += add;
                }
            }
        }
        total += std::mem::take(&mut states[l]);
    }
    total
}

/// Collapses a homogeneous polynomial in the simple roots to `c * t^d` by
/// sending every simple root to t.
pub fn specialize(p: &RootPolynomial) -> Result<TMonomial> {
    let mut degree: Option<usize> = None;
    let mut total = BigInt::zero();
    for (expo, c) in p.terms() {
        let d = expo.iter().map(|&e| e as usize).sum();
        match degree {
            None => degree = Some(d),
            Some(d0) if d0 != d => return Err(Error::NotHomogeneous(d0, d)),
            _ => {}
        }
        total += c;
    }
    Ok(match degree {
        None => TMonomial::zero(),
        Some(d) => TMonomial::from_integer(total, d),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::LieType;

    fn system(name: &str) -> RootSystem {
        RootSystem::new(LieType::parse(name).unwrap())
    }

    #[track_caller]
    fn assert_value(
        rs: &RootSystem,
        v_word: &[usize],
        w_word: &[usize],
        coeff: i64,
        degree: usize,
    ) {
        let v = rs.element_of(v_word).unwrap();
        let got = rs.billey_specialized(&v, w_word).unwrap();
        assert_eq!(got, TMonomial::from_integer(BigInt::from(coeff), degree));
    }

    #[test]
    fn a2_localizations_of_s1() {
        let rs = system("A2");
        assert_value(&rs, &[1], &[], 0, 0);
        assert_value(&rs, &[1], &[1], 1, 1);
        assert_value(&rs, &[1], &[2], 0, 0);
        assert_value(&rs, &[1], &[1, 2], 1, 1);
        assert_value(&rs, &[1], &[2, 1], 2, 1);
        assert_value(&rs, &[1], &[1, 2, 1], 2, 1);
    }

    #[test]
    fn a2_position_roots() {
        let rs = system("A2");
        let word = [1, 2, 1];
        assert_eq!(rs.root_at(&word, 1).unwrap(), Root::new(vec![1, 0]));
        assert_eq!(rs.root_at(&word, 2).unwrap(), Root::new(vec![1, 1]));
        assert_eq!(rs.root_at(&word, 3).unwrap(), Root::new(vec![0, 1]));
        assert!(rs.root_at(&word, 0).is_err());
        assert!(rs.root_at(&word, 4).is_err());
    }

    #[test]
    fn a2_symbolic_localization() {
        let rs = system("A2");
        let v = rs.element_of(&[1]).unwrap();
        let p = rs.billey_polynomial(&v, &[1, 2, 1]).unwrap();
        let terms: Vec<(Vec<u32>, BigInt)> =
            p.terms().map(|(e, c)| (e.to_vec(), c.clone())).collect();
        assert_eq!(
            terms,
            vec![(vec![0, 1], BigInt::from(1)), (vec![1, 0], BigInt::from(1)),]
        );
        assert_eq!(p.to_string(), "a2 + a1");
        assert_eq!(
            specialize(&p).unwrap(),
            TMonomial::from_integer(BigInt::from(2), 1)
        );
    }

    #[test]
    fn b3_heights() {
        let rs = system("B3");
        let hl = rs.heights_list(&[3, 2, 3, 1, 2, 3, 1, 2, 1]).unwrap();
        assert_eq!(hl.heights(), &[1, 3, 2, 4, 5, 3, 1, 2, 1]);
    }

    #[test]
    fn b3_two_letter_localization() {
        let rs = system("B3");
        assert_value(&rs, &[1, 2], &[3, 2, 3, 1, 2, 3, 1, 2, 1], 30, 2);
    }

    #[test]
    fn g2_heights_and_localizations() {
        let rs = system("G2");
        let word = [1, 2, 1, 2, 1, 2];
        let hl = rs.heights_list(&word).unwrap();
        assert_eq!(hl.heights(), &[1, 4, 3, 5, 2, 1]);
        assert_value(&rs, &[1], &word, 6, 1);
        assert_value(&rs, &[2], &word, 10, 1);
        assert_value(&rs, &[1, 2], &word, 30, 2);
    }

    #[test]
    fn rejects_non_reduced_words() {
        let rs = system("A2");
        assert!(matches!(
            rs.heights_list(&[1, 1]),
            Err(Error::NotReduced(_))
        ));
        let v = rs.element_of(&[1]).unwrap();
        assert!(rs.billey_specialized(&v, &[2, 1, 2, 1]).is_err());
    }

    #[test]
    fn specialized_matches_symbolic() {
        let rs = system("B2");
        let w0_word = [1, 2, 1, 2];
        for v_word in [&[][..], &[1], &[2], &[1, 2], &[2, 1], &[1, 2, 1]] {
            let v = rs.element_of(v_word).unwrap();
            let sym = specialize(&rs.billey_polynomial(&v, &w0_word).unwrap()).unwrap();
            let fast = rs.billey_specialized(&v, &w0_word).unwrap();
            assert_eq!(sym, fast, "v = {v_word:?}");
        }
    }

    #[test]
    fn vanishing_off_bruhat_interval() {
        let rs = system("A2");
        let s2 = rs.element_of(&[2]).unwrap();
        assert!(rs.billey_specialized(&s2, &[1]).unwrap().is_zero());
        let w0 = rs.element_of(&[1, 2, 1]).unwrap();
        assert!(rs.billey_specialized(&w0, &[1, 2]).unwrap().is_zero());
    }

    #[test]
    fn monomial_arithmetic() {
        let t2 = TMonomial::from_integer(BigInt::from(3), 2);
        let t0 = TMonomial::zero();
        assert_eq!(t0.degree(), 0);
        assert_eq!(t2.checked_add(&t0).unwrap(), t2);
        assert_eq!(t2.checked_sub(&t2).unwrap(), TMonomial::zero());
        assert!(t2
            .checked_add(&TMonomial::from_integer(BigInt::from(1), 1))
            .is_none());
        let q = t2
            .checked_div(&TMonomial::from_integer(BigInt::from(2), 1))
            .unwrap();
        assert_eq!(q.degree(), 1);
        assert_eq!(
            q.coeff(),
            &BigRational::new(BigInt::from(3), BigInt::from(2))
        );
        assert!(t2.checked_div(&TMonomial::zero()).is_none());
    }
}
