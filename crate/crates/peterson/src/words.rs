//! Reduced words for longest elements: generated closed-form templates
//! for the classical families, bundled words for the exceptional types,
//! and translation of templates onto arbitrary subsets.

use crate::error::{Error, Result};
use crate::root_system::{Family, LieType, RootSystem, SimpleSubset};
use crate::weyl::Word;

#[cfg(test)]
const A4_WORD: &str = include_str!("../data/a4_word.txt");
#[cfg(test)]
const B4_WORD: &str = include_str!("../data/b4_word.txt");
#[cfg(test)]
const D5_WORD: &str = include_str!("../data/d5_word.txt");
const F4_WORD: &str = include_str!("../data/f4_word.txt");
const E6_WORD: &str = include_str!("../data/e6_word.txt");
const E7_WORD: &str = include_str!("../data/e7_word.txt");
const E8_WORD: &str = include_str!("../data/e8_word.txt");
const E6_HEIGHTS: &str = include_str!("../data/e6_heights.txt");
const E7_HEIGHTS: &str = include_str!("../data/e7_heights.txt");
const E8_HEIGHTS: &str = include_str!("../data/e8_heights.txt");

fn parse_word(data: &str) -> Word {
    data.trim()
        .split(',')
        .map(|tok| tok.trim().parse().expect("bundled word data is numeric"))
        .collect()
}

fn parse_heights(data: &str) -> Vec<i64> {
    data.trim()
        .split(',')
        .map(|tok| tok.trim().parse().expect("bundled height data is numeric"))
        .collect()
}

/// The reference reduced word for the longest element of a full root
/// system, in standard labels. Classical families use a closed-form row
/// pattern; F4 and the E-series use bundled words.
pub fn template_word(t: LieType) -> Word {
    let n = t.rank();
    match t.family() {
        Family::A => {
            let mut out = Vec::with_capacity(n * (n + 1) / 2);
            for j in (1..=n).rev() {
                out.extend(1..=j);
            }
            out
        }
        Family::B | Family::C => {
            let mut out = Vec::with_capacity(n * n);
            for j in (1..=n).rev() {
                out.extend(j..=n);
            }
            for j in (1..n).rev() {
                out.extend(1..=j);
            }
            out
        }
        Family::D => {
            let mut out = Vec::with_capacity(n * (n - 1));
            for j in (1..n).rev() {
                out.extend(j..=n - 2);
                out.push(if j % 2 == 1 { n } else { n - 1 });
            }
            for j in (1..n).rev() {
                out.extend(1..=j);
            }
            out
        }
        Family::G => vec![1, 2, 1, 2, 1, 2],
        Family::F => parse_word(F4_WORD),
        Family::E => match n {
            6 => parse_word(E6_WORD),
            7 => parse_word(E7_WORD),
            _ => parse_word(E8_WORD),
        },
    }
}

/// The bundled height list of the E-series reference word, if `t` is an
/// E type.
pub fn bundled_heights(t: LieType) -> Option<Vec<i64>> {
    if t.family() != Family::E {
        return None;
    }
    Some(match t.rank() {
        6 => parse_heights(E6_HEIGHTS),
        7 => parse_heights(E7_HEIGHTS),
        _ => parse_heights(E8_HEIGHTS),
    })
}

/// A reference reduced word for `w_K`: per component, the template word
/// of the component's type with letters translated through its index
/// map; components concatenated in ascending smallest-ambient-index
/// order. The result is checked to multiply to the longest element.
pub fn reference_word(rs: &RootSystem, subset: &SimpleSubset) -> Result<Word> {
    let mut out = Vec::new();
    for comp in subset.components() {
        let template = template_word(comp.lie_type());
        let map = comp.index_map();
        out.extend(template.iter().map(|&letter| map[letter - 1]));
    }
    let expected = rs.longest_element(subset.indices())?;
    let got = rs.element_of(&out)?;
    if got != expected {
        return Err(Error::Verification(format!(
            "reference word for subset {:?} does not multiply to the longest element",
            subset.indices()
        )));
    }
    Ok(out)
}
