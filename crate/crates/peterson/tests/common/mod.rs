//! Shared oracles for the integration suites.
//!
//! Everything here recomputes results from first principles (breadth-first
//! search over the group, mask enumeration over subwords) so the library's
//! dynamic programs and cached tables are checked against independent code
//! paths, not against themselves.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use num::BigInt;
use peterson::{LieType, RootSystem, WeylElement, Word};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Builds the root system named by a string such as "B3".
pub fn system(name: &str) -> RootSystem {
    RootSystem::new(LieType::parse(name).unwrap())
}

/// Word lengths by breadth-first search from the identity over the Cayley
/// graph: an element's distance equals its Coxeter length.
pub fn bfs_lengths(rs: &RootSystem) -> HashMap<WeylElement, usize> {
    let gens: Vec<WeylElement> = (1..=rs.rank())
        .map(|i| rs.simple_reflection(i).unwrap())
        .collect();
    let mut dist = HashMap::new();
    let mut queue = VecDeque::new();
    let identity = WeylElement::identity(rs.rank());
    dist.insert(identity.clone(), 0usize);
    queue.push_back(identity);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for g in &gens {
            let next = w.compose(g);
            if !dist.contains_key(&next) {
                dist.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    dist
}

/// Every element expressible as a subword (arbitrary gaps) of `word`.
///
/// By the subword property of Bruhat order this set is exactly
/// `{v : v <= element_of(word)}` when `word` is reduced.
pub fn subword_reachable(rs: &RootSystem, word: &[usize]) -> HashSet<WeylElement> {
    let mut reachable = HashSet::new();
    reachable.insert(WeylElement::identity(rs.rank()));
    for &letter in word {
        let s = rs.simple_reflection(letter).unwrap();
        let step: Vec<WeylElement> = reachable.iter().map(|w| w.compose(&s)).collect();
        reachable.extend(step);
    }
    reachable
}

/// Billey evaluation by brute force over all position subsets of `word`.
///
/// Enumerates every mask, keeps those whose subword multiplies to `v`, takes
/// the minimal popcount among them as the length of `v` (deletion condition),
/// and sums the height products of the masks attaining it. Position roots are
/// recomputed here from prefix products, not taken from the library's walk.
pub fn billey_brute(rs: &RootSystem, v: &WeylElement, word: &[usize]) -> BigInt {
    assert!(word.len() <= 20, "mask enumeration is exponential");
    let mut prefix = WeylElement::identity(rs.rank());
    let mut heights = Vec::with_capacity(word.len());
    let mut letters = Vec::with_capacity(word.len());
    for &letter in word {
        let s = rs.simple_reflection(letter).unwrap();
        let root = prefix.apply(&rs.simple_root(letter).unwrap());
        heights.push(root.height());
        letters.push(s.clone());
        prefix = prefix.compose(&s);
    }
    let mut best_len = usize::MAX;
    let mut total = BigInt::from(0);
    for mask in 0u64..(1u64 << word.len()) {
        let mut product = WeylElement::identity(rs.rank());
        for (j, s) in letters.iter().enumerate() {
            if mask >> j & 1 == 1 {
                product = product.compose(s);
            }
        }
        if &product != v {
            continue;
        }
        let count = mask.count_ones() as usize;
        let mut weight = BigInt::from(1);
        for (j, h) in heights.iter().enumerate() {
            if mask >> j & 1 == 1 {
                weight *= BigInt::from(*h);
            }
        }
        match count.cmp(&best_len) {
            std::cmp::Ordering::Less => {
                best_len = count;
                total = weight;
            }
            std::cmp::Ordering::Equal => total += weight,
            std::cmp::Ordering::Greater => {}
        }
    }
    total
}

/// Deterministic generator for the seeded suites.
pub fn seeded_rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A uniformly random-ish reduced word of the requested length (shorter only
/// when the longest element is reached first): letters are drawn among those
/// extending the current element.
pub fn random_reduced_word(rng: &mut StdRng, rs: &RootSystem, len: usize) -> Word {
    let mut word = Vec::with_capacity(len);
    let mut current = WeylElement::identity(rs.rank());
    for _ in 0..len {
        let ascents: Vec<usize> = {
            let descents = rs.right_descents(&current);
            (1..=rs.rank()).filter(|i| !descents.contains(i)).collect()
        };
        if ascents.is_empty() {
            break;
        }
        let letter = ascents[rng.random_range(0..ascents.len())];
        word.push(letter);
        current = current.compose(&rs.simple_reflection(letter).unwrap());
    }
    word
}

/// All subsets of {1..rank} as sorted index lists, by size then
/// lexicographically (the library's display order).
pub fn all_subsets(rank: usize) -> Vec<Vec<usize>> {
    let mut subsets: Vec<Vec<usize>> = (0u32..1 << rank)
        .map(|mask| (1..=rank).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    subsets
}
