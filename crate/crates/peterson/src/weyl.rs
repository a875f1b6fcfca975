//! Weyl group elements and reduced-word combinatorics.

use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::root_system::{Root, RootSystem};

/// A word in the simple reflections, written as 1-based indices.
pub type Word = Vec<usize>;

/// Cap on how many results a single reduced-word enumeration may produce.
pub const WORD_ENUMERATION_CAP: usize = 1_000_000;

/// A Weyl group element stored as its matrix action on the root lattice,
/// together with the inverse matrix so that left and right descents are
/// equally cheap.
///
/// Column `j - 1` of the matrix holds the simple-root coordinates of the
/// image of `alpha_j`. Equality and hashing use only the forward matrix.
#[derive(Clone, Debug)]
pub struct WeylElement {
    rank: usize,
    mat: Vec<i64>,
    inv: Vec<i64>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &WeylElement) -> bool {
        self.rank == other.rank && self.mat == other.mat
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rank.hash(state);
        self.mat.hash(state);
    }
}

impl WeylElement {
    pub fn identity(rank: usize) -> WeylElement {
        let mut mat = vec![0i64; rank * rank];
        for i in 0..rank {
            mat[i * rank + i] = 1;
        }
        WeylElement {
            rank,
            inv: mat.clone(),
            mat,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_identity(&self) -> bool {
        let mut expected;
        for r in 0..self.rank {
            for c in 0..self.rank {
                expected = i64::from(r == c);
                if self.mat[r * self.rank + c] != expected {
                    return false;
                }
            }
        }
        true
    }

    /// The group product `self * other`, acting as `self(other(x))`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.rank, other.rank, "rank mismatch in composition");
        WeylElement {
            rank: self.rank,
            mat: mat_mul(self.rank, &self.mat, &other.mat),
            inv: mat_mul(self.rank, &other.inv, &self.inv),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement {
            rank: self.rank,
            mat: self.inv.clone(),
            inv: self.mat.clone(),
        }
    }

    /// Applies the element to a root written in simple-root coordinates.
    /// Panics if the coordinate length differs from the rank.
    pub fn apply(&self, r: &Root) -> Root {
        assert_eq!(self.rank, r.coeffs().len(), "rank mismatch in apply");
        Root::new(apply_mat(self.rank, &self.mat, r.coeffs()))
    }

    pub fn apply_inverse(&self, r: &Root) -> Root {
        assert_eq!(self.rank, r.coeffs().len(), "rank mismatch in apply");
        Root::new(apply_mat(self.rank, &self.inv, r.coeffs()))
    }

    /// True when the image of `alpha_i` under the forward matrix is a
    /// negative root, i.e. `i` is a right descent.
    fn column_is_negative(&self, mat: &[i64], i: usize) -> bool {
        (0..self.rank).any(|r| mat[r * self.rank + (i - 1)] < 0)
    }

    fn right_descent(&self, i: usize) -> bool {
        self.column_is_negative(&self.mat, i)
    }

    fn left_descent(&self, i: usize) -> bool {
        self.column_is_negative(&self.inv, i)
    }
}

fn mat_mul(rank: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; rank * rank];
    for r in 0..rank {
        for k in 0..rank {
            let av = a[r * rank + k];
            if av == 0 {
                continue;
            }
            for c in 0..rank {
                out[r * rank + c] += av * b[k * rank + c];
            }
        }
    }
    out
}

fn apply_mat(rank: usize, mat: &[i64], x: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; rank];
    for (c, &xc) in x.iter().enumerate() {
        if xc == 0 {
            continue;
        }
        for r in 0..rank {
            out[r] += mat[r * rank + c] * xc;
        }
    }
    out
}

impl RootSystem {
    /// The simple reflection `s_i` as a Weyl group element.
    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        self.check_index(i)?;
        let rank = self.rank();
        let mut mat = vec![0i64; rank * rank];
        for c in 0..rank {
            mat[c * rank + c] = 1;
            mat[(i - 1) * rank + c] -= self.cartan(i, c + 1);
        }
        Ok(WeylElement {
            rank,
            inv: mat.clone(),
            mat,
        })
    }

    /// The product `s_{b_1} s_{b_2} ... s_{b_m}` of an arbitrary word.
    pub fn element_of(&self, word: &[usize]) -> Result<WeylElement> {
        let mut w = WeylElement::identity(self.rank());
        for &b in word {
            w = w.compose(&self.simple_reflection(b)?);
        }
        Ok(w)
    }

    /// Coxeter length: the number of positive roots sent to negative ones.
    pub fn length(&self, w: &WeylElement) -> usize {
        assert_eq!(w.rank(), self.rank(), "rank mismatch");
        self.positive_roots()
            .iter()
            .filter(|r| w.apply(r).is_negative())
            .count()
    }

    /// Whether the word's letter count equals the length of its product.
    pub fn is_reduced(&self, word: &[usize]) -> Result<bool> {
        let w = self.element_of(word)?;
        Ok(self.length(&w) == word.len())
    }

    /// Indices `i` with `w(alpha_i) < 0`, ascending.
    pub fn right_descents(&self, w: &WeylElement) -> Vec<usize> {
        (1..=self.rank()).filter(|&i| w.right_descent(i)).collect()
    }

    /// Indices `i` with `w^{-1}(alpha_i) < 0`, ascending.
    pub fn left_descents(&self, w: &WeylElement) -> Vec<usize> {
        (1..=self.rank()).filter(|&i| w.left_descent(i)).collect()
    }

    /// The reduced word obtained by repeatedly peeling the smallest left
    /// descent. This is the lexicographically smallest reduced word.
    pub fn canonical_word(&self, w: &WeylElement) -> Word {
        let mut u = w.clone();
        let mut word = Vec::new();
        while !u.is_identity() {
            let i = (1..=self.rank())
                .find(|&i| u.left_descent(i))
                .expect("a non-identity element has a left descent");
            word.push(i);
            u = self
                .simple_reflection(i)
                .expect("descent index is in range")
                .compose(&u);
        }
        word
    }

    /// Every reduced word of `w`, or an error once the enumeration
    /// exceeds [`WORD_ENUMERATION_CAP`] results.
    ///
    /// Words are produced in lexicographic order.
    pub fn all_reduced_words(&self, w: &WeylElement) -> Result<Vec<Word>> {
        let mut prefix = Vec::new();
        let mut out = Vec::new();
        self.reduced_words_rec(w, &mut prefix, &mut out)?;
        Ok(out)
    }

    fn reduced_words_rec(
        &self,
        w: &WeylElement,
        prefix: &mut Word,
        out: &mut Vec<Word>,
    ) -> Result<()> {
        if w.is_identity() {
            if out.len() >= WORD_ENUMERATION_CAP {
                return Err(Error::CapExceeded {
                    cap: WORD_ENUMERATION_CAP,
                });
            }
            out.push(prefix.clone());
            return Ok(());
        }
        for i in 1..=self.rank() {
            if !w.left_descent(i) {
                continue;
            }
            let rest = self
                .simple_reflection(i)
                .expect("descent index is in range")
                .compose(w);
            prefix.push(i);
            self.reduced_words_rec(&rest, prefix, out)?;
            prefix.pop();
        }
        Ok(())
    }

    /// Bruhat order comparison `v <= w`, by stripping left descents of `w`.
    pub fn bruhat_leq(&self, v: &WeylElement, w: &WeylElement) -> bool {
        assert_eq!(v.rank(), self.rank(), "rank mismatch");
        assert_eq!(w.rank(), self.rank(), "rank mismatch");
        let mut v = v.clone();
        let mut w = w.clone();
        loop {
            if v.is_identity() {
                return true;
            }
            if w.is_identity() {
                return false;
            }
            let i = (1..=self.rank())
                .find(|&i| w.left_descent(i))
                .expect("a non-identity element has a left descent");
            let si = self
                .simple_reflection(i)
                .expect("descent index is in range");
            if v.left_descent(i) {
                v = si.compose(&v);
            }
            w = si.compose(&w);
        }
    }

    /// The longest element of the parabolic subgroup generated by the
    /// given simple-root indices, built by greedy ascent.
    pub fn longest_element(&self, indices: &[usize]) -> Result<WeylElement> {
        let subset = self.check_subset(indices)?;
        let mut w = WeylElement::identity(self.rank());
        loop {
            let Some(&i) = subset.iter().find(|&&i| !w.right_descent(i)) else {
                return Ok(w);
            };
            w = w.compose(&self.simple_reflection(i)?);
        }
    }
}
