//! Command implementations behind the command-line binary: argument
//! interpretation and rendering for each subcommand.

use std::str::FromStr;

use crate::classes::Peterson;
use crate::error::{Error, Result};
use crate::format::{self, OutputFormat};
use crate::root_system::{LieType, RootSystem};
use crate::words;

/// Subset argument: `all` for the full diagram, `none` for the empty
/// set, or comma-separated 1-based ambient indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubsetArg {
    All,
    Empty,
    Indices(Vec<usize>),
}

impl SubsetArg {
    /// The ambient index list this argument denotes at the given rank.
    pub fn resolve(&self, rank: usize) -> Vec<usize> {
        match self {
            SubsetArg::All => (1..=rank).collect(),
            SubsetArg::Empty => Vec::new(),
            SubsetArg::Indices(v) => v.clone(),
        }
    }
}

impl FromStr for SubsetArg {
    type Err = Error;

    fn from_str(s: &str) -> Result<SubsetArg> {
        match s.trim().to_ascii_lowercase().as_str() {
            "all" => Ok(SubsetArg::All),
            "none" | "" => Ok(SubsetArg::Empty),
            _ => Ok(SubsetArg::Indices(parse_index_list(s)?)),
        }
    }
}

/// Parses a comma-separated list of positive integers.
pub fn parse_index_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("cannot parse index '{}'", tok.trim())))
        })
        .collect()
}

fn context(rs: &RootSystem, paper_words: bool) -> Result<Peterson<'_>> {
    if paper_words {
        Peterson::with_reference_words(rs)
    } else {
        Peterson::new(rs)
    }
}

fn full_delta(rank: usize) -> Vec<usize> {
    (1..=rank).collect()
}

/// The rendered localization matrix of the class basis.
pub fn cmd_basis(t: LieType, format: OutputFormat, paper_words: bool) -> Result<String> {
    let rs = RootSystem::new(t);
    let pet = context(&rs, paper_words)?;
    Ok(format::render_basis(&pet.basis_table(), format))
}

/// The rendered Monk expansion of `p_{s_i} * p_{v_K}`.
pub fn cmd_monk(
    t: LieType,
    i: usize,
    k: &SubsetArg,
    format: OutputFormat,
    paper_words: bool,
) -> Result<String> {
    let rs = RootSystem::new(t);
    let pet = context(&rs, paper_words)?;
    let expansion = pet.monk(i, &k.resolve(rs.rank()))?;
    Ok(format::render_monk(&expansion, format))
}

/// Rendered Giambelli certificates: one subset, or every subset with
/// `all_subsets`.
pub fn cmd_giambelli(
    t: LieType,
    k: Option<&SubsetArg>,
    all_subsets: bool,
    format: OutputFormat,
    paper_words: bool,
) -> Result<String> {
    let rs = RootSystem::new(t);
    let pet = context(&rs, paper_words)?;
    let requested: Vec<Vec<usize>> = if all_subsets {
        pet.subsets().iter().map(|s| s.indices().to_vec()).collect()
    } else {
        let k = k.ok_or_else(|| {
            Error::InvalidArgument("giambelli needs --K <subset> or --all".to_string())
        })?;
        vec![k.resolve(rs.rank())]
    };
    let certs = requested
        .iter()
        .map(|indices| pet.giambelli(indices))
        .collect::<Result<Vec<_>>>()?;
    Ok(format::render_giambelli(&certs, format))
}

/// The rendered height list of a reduced word; defaults to a reduced
/// word of the longest element.
pub fn cmd_heights(
    t: LieType,
    word: Option<&[usize]>,
    format: OutputFormat,
    paper_words: bool,
) -> Result<String> {
    let rs = RootSystem::new(t);
    let word = match word {
        Some(w) => w.to_vec(),
        None if paper_words => {
            let subset = rs.classify_subset(&full_delta(rs.rank()))?;
            words::reference_word(&rs, &subset)?
        }
        None => {
            let longest = rs.longest_element(&full_delta(rs.rank()))?;
            rs.canonical_word(&longest)
        }
    };
    let hl = rs.heights_list(&word)?;
    Ok(format::render_heights(&hl, format))
}

/// The rendered non-integrality scan over every pair (i, K).
pub fn cmd_scan(t: LieType, format: OutputFormat, paper_words: bool) -> Result<String> {
    let rs = RootSystem::new(t);
    let pet = context(&rs, paper_words)?;
    let hits = pet.scan_nonintegral()?;
    Ok(format::render_scan(&hits, format))
}
