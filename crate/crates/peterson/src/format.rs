//! Output rendering: the display form of t-monomials and the table,
//! JSON, and CSV forms of every computation result.
//!
//! JSON output is byte-deterministic: object keys serialize in sorted
//! order and all big integers are carried as decimal strings. CSV
//! fields containing commas or quotes are quoted per RFC 4180.

use std::fmt;
use std::str::FromStr;

use num::{BigRational, One};
use serde_json::{json, Value};

use crate::billey::{HeightList, TMonomial};
use crate::classes::{BasisTable, GiambelliCertificate, MonkExpansion, NonIntegralHit};
use crate::error::Error;
use crate::root_system::SimpleSubset;

impl fmt::Display for TMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let c = self.coeff();
        if self.degree() == 0 {
            return write!(f, "{c}");
        }
        let t = if self.degree() == 1 {
            "t".to_string()
        } else {
            format!("t^{}", self.degree())
        };
        if c.is_one() {
            write!(f, "{t}")
        } else if *c == -BigRational::one() {
            write!(f, "-{t}")
        } else {
            write!(f, "{c}{t}")
        }
    }
}

/// Rendering target of the command-line surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<OutputFormat, Error> {
        match s.to_ascii_lowercase().as_str() {
            "table" => Ok(OutputFormat::Table),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            _ => Err(Error::InvalidArgument(format!(
                "unknown output format '{s}', expected table, json, or csv"
            ))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Table => "table",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        })
    }
}

/// Braced index-list label, e.g. `{1,3}`; the empty set is `{}`.
pub fn indices_label(indices: &[usize]) -> String {
    let inner = indices
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",");
    format!("{{{inner}}}")
}

/// Braced label of a subset's ambient indices.
pub fn subset_label(subset: &SimpleSubset) -> String {
    indices_label(subset.indices())
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_line(fields: &[String]) -> String {
    let mut line = fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",");
    line.push('\n');
    line
}

fn monomial_json(m: &TMonomial) -> Value {
    json!({
        "num": m.coeff().numer().to_string(),
        "den": m.coeff().denom().to_string(),
        "deg": m.degree(),
    })
}

fn rational_json(r: &BigRational) -> Value {
    json!({
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
    })
}

fn subset_json(subset: &SimpleSubset) -> Value {
    json!(subset.indices())
}

fn json_line(value: &Value) -> String {
    let mut s = serde_json::to_string(value).expect("plain JSON values serialize");
    s.push('\n');
    s
}

/// Pads a grid of cells into aligned columns: the first column is
/// left-aligned, all others right-aligned.
fn render_grid(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0; columns];
    for row in rows {
        for (c, cell) in row.iter().enumerate() {
            widths[c] = widths[c].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            if c == 0 {
                line.push_str(&format!("{cell:<width$}", width = widths[c]));
            } else {
                line.push_str(&format!("{cell:>width$}", width = widths[c]));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Renders the full localization matrix.
pub fn render_basis(table: &BasisTable, format: OutputFormat) -> String {
    let labels: Vec<String> = table.subsets().iter().map(subset_label).collect();
    match format {
        OutputFormat::Table => {
            let mut rows = Vec::with_capacity(labels.len() + 1);
            let mut header = vec![table.lie_type().to_string()];
            header.extend(labels.iter().cloned());
            rows.push(header);
            for (point, row) in table.matrix().iter().enumerate() {
                let mut line = vec![labels[point].clone()];
                line.extend(row.iter().map(ToString::to_string));
                rows.push(line);
            }
            render_grid(&rows)
        }
        OutputFormat::Json => {
            let value = json!({
                "type": table.lie_type().to_string(),
                "fixed_points": table.subsets().iter().map(subset_json).collect::<Vec<_>>(),
                "classes": table.subsets().iter().map(subset_json).collect::<Vec<_>>(),
                "matrix": table
                    .matrix()
                    .iter()
                    .map(|row| row.iter().map(monomial_json).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            });
            json_line(&value)
        }
        OutputFormat::Csv => {
            let mut out = String::new();
            let mut header = vec!["K".to_string()];
            header.extend(labels.iter().cloned());
            out.push_str(&csv_line(&header));
            for (point, row) in table.matrix().iter().enumerate() {
                let mut line = vec![labels[point].clone()];
                line.extend(row.iter().map(ToString::to_string));
                out.push_str(&csv_line(&line));
            }
            out
        }
    }
}

/// Renders a Monk expansion: the diagonal monomial and every superset
/// term in subset order.
pub fn render_monk(expansion: &MonkExpansion, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => {
            let mut out = format!(
                "i={} K={}\ndiagonal: {}\n",
                expansion.i(),
                subset_label(expansion.subset()),
                expansion.diagonal()
            );
            for term in expansion.terms() {
                out.push_str(&format!(
                    "J={}: {}\n",
                    subset_label(&term.subset),
                    term.coeff
                ));
            }
            out
        }
        OutputFormat::Json => {
            let value = json!({
                "i": expansion.i(),
                "K": subset_json(expansion.subset()),
                "diagonal": monomial_json(expansion.diagonal()),
                "terms": expansion
                    .terms()
                    .iter()
                    .map(|term| json!({
                        "J": subset_json(&term.subset),
                        "coeff": rational_json(&term.coeff),
                    }))
                    .collect::<Vec<_>>(),
            });
            json_line(&value)
        }
        OutputFormat::Csv => {
            let mut out = csv_line(&[
                "kind".to_string(),
                "subset".to_string(),
                "value".to_string(),
            ]);
            out.push_str(&csv_line(&[
                "diagonal".to_string(),
                subset_label(expansion.subset()),
                expansion.diagonal().to_string(),
            ]));
            for term in expansion.terms() {
                out.push_str(&csv_line(&[
                    "term".to_string(),
                    subset_label(&term.subset),
                    term.coeff.to_string(),
                ]));
            }
            out
        }
    }
}

fn component_summary(cert: &GiambelliCertificate) -> Vec<String> {
    cert.components()
        .iter()
        .map(|comp| {
            format!(
                "{}{} factorial={} words={}",
                comp.lie_type,
                indices_label(&comp.indices),
                comp.factorial,
                comp.reduced_words
            )
        })
        .collect()
}

/// Renders Giambelli certificates, one per requested subset.
pub fn render_giambelli(certs: &[GiambelliCertificate], format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => {
            let mut out = String::new();
            for cert in certs {
                let mut line = format!("K={} C={}", subset_label(cert.subset()), cert.constant());
                let comps = component_summary(cert);
                if !comps.is_empty() {
                    line.push_str(" components: ");
                    line.push_str(&comps.join("; "));
                }
                line.push('\n');
                out.push_str(&line);
            }
            out
        }
        OutputFormat::Json => {
            let value = certs
                .iter()
                .map(|cert| {
                    json!({
                        "K": subset_json(cert.subset()),
                        "constant": rational_json(cert.constant()),
                        "components": cert
                            .components()
                            .iter()
                            .map(|comp| json!({
                                "indices": comp.indices,
                                "type": comp.lie_type.to_string(),
                                "factorial": comp.factorial.to_string(),
                                "reduced_words": comp.reduced_words,
                            }))
                            .collect::<Vec<_>>(),
                    })
                })
                .collect::<Vec<_>>();
            json_line(&json!(value))
        }
        OutputFormat::Csv => {
            let mut out = csv_line(&[
                "K".to_string(),
                "constant".to_string(),
                "components".to_string(),
            ]);
            for cert in certs {
                out.push_str(&csv_line(&[
                    subset_label(cert.subset()),
                    cert.constant().to_string(),
                    component_summary(cert).join("; "),
                ]));
            }
            out
        }
    }
}

/// Renders a height list as parallel word and height rows.
pub fn render_heights(hl: &HeightList, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => {
            let word = hl
                .word()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",");
            let heights = hl
                .heights()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",");
            format!("word: {word}\nheights: {heights}\n")
        }
        OutputFormat::Json => {
            let value = json!({
                "word": hl.word(),
                "heights": hl.heights(),
            });
            json_line(&value)
        }
        OutputFormat::Csv => {
            let mut out = csv_line(&[
                "position".to_string(),
                "letter".to_string(),
                "height".to_string(),
            ]);
            for (pos, (&letter, &height)) in hl.word().iter().zip(hl.heights()).enumerate() {
                out.push_str(&csv_line(&[
                    (pos + 1).to_string(),
                    letter.to_string(),
                    height.to_string(),
                ]));
            }
            out
        }
    }
}

/// Renders the non-integrality scan report.
pub fn render_scan(hits: &[NonIntegralHit], format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => {
            let mut out = format!("non-integral coefficients: {}\n", hits.len());
            for hit in hits {
                out.push_str(&format!(
                    "i={} K={} J={} coeff={}\n",
                    hit.i,
                    subset_label(&hit.base),
                    subset_label(&hit.superset),
                    hit.coeff
                ));
            }
            out
        }
        OutputFormat::Json => {
            let value = hits
                .iter()
                .map(|hit| {
                    json!({
                        "i": hit.i,
                        "K": subset_json(&hit.base),
                        "J": subset_json(&hit.superset),
                        "coeff": rational_json(&hit.coeff),
                    })
                })
                .collect::<Vec<_>>();
            json_line(&json!(value))
        }
        OutputFormat::Csv => {
            let mut out = csv_line(&[
                "i".to_string(),
                "K".to_string(),
                "J".to_string(),
                "coeff".to_string(),
            ]);
            for hit in hits {
                out.push_str(&csv_line(&[
                    hit.i.to_string(),
                    subset_label(&hit.base),
                    subset_label(&hit.superset),
                    hit.coeff.to_string(),
                ]));
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::Peterson;
    use crate::root_system::{LieType, RootSystem};
    use num::BigInt;

    fn mono(coeff: i64, degree: usize) -> TMonomial {
        TMonomial::from_integer(BigInt::from(coeff), degree)
    }

    #[test]
    fn monomial_display_forms() {
        assert_eq!(mono(0, 3).to_string(), "0");
        assert_eq!(mono(1, 0).to_string(), "1");
        assert_eq!(mono(1, 1).to_string(), "t");
        assert_eq!(mono(6, 1).to_string(), "6t");
        assert_eq!(mono(30, 2).to_string(), "30t^2");
        assert_eq!(mono(-1, 2).to_string(), "-t^2");
        let half = TMonomial::new(BigRational::new(BigInt::from(5), BigInt::from(2)), 1);
        assert_eq!(half.to_string(), "5/2t");
        let scalar = TMonomial::new(BigRational::new(BigInt::from(5), BigInt::from(2)), 0);
        assert_eq!(scalar.to_string(), "5/2");
    }

    #[test]
    fn output_format_parsing() {
        assert_eq!(
            "table".parse::<OutputFormat>().unwrap(),
            OutputFormat::Table
        );
        assert_eq!("JSON".parse::<OutputFormat>().unwrap(), OutputFormat::Json);
        assert_eq!("csv".parse::<OutputFormat>().unwrap(), OutputFormat::Csv);
        assert!("xml".parse::<OutputFormat>().is_err());
    }

    #[test]
    fn heights_json_is_sorted_and_compact() {
        let rs = RootSystem::new(LieType::parse("B3").unwrap());
        let hl = rs.heights_list(&[3, 2, 3, 1, 2, 3, 1, 2, 1]).unwrap();
        assert_eq!(
            render_heights(&hl, OutputFormat::Json),
            "{\"heights\":[1,3,2,4,5,3,1,2,1],\"word\":[3,2,3,1,2,3,1,2,1]}\n"
        );
    }

    #[test]
    fn a1_basis_table_text() {
        let rs = RootSystem::new(LieType::parse("A1").unwrap());
        let pet = Peterson::new(&rs).unwrap();
        let rendered = render_basis(&pet.basis_table(), OutputFormat::Table);
        assert_eq!(rendered, "A1   {}  {1}\n{}    1    0\n{1}   1    t\n");
    }

    #[test]
    fn monk_json_golden_for_a1() {
        let rs = RootSystem::new(LieType::parse("A1").unwrap());
        let pet = Peterson::new(&rs).unwrap();
        let expansion = pet.monk(1, &[1]).unwrap();
        assert_eq!(
            render_monk(&expansion, OutputFormat::Json),
            "{\"K\":[1],\"diagonal\":{\"deg\":1,\"den\":\"1\",\"num\":\"1\"},\"i\":1,\"terms\":[]}\n"
        );
    }

    #[test]
    fn csv_quotes_fields_with_commas() {
        let rs = RootSystem::new(LieType::parse("A2").unwrap());
        let pet = Peterson::new(&rs).unwrap();
        let rendered = render_basis(&pet.basis_table(), OutputFormat::Csv);
        assert!(rendered.contains("\"{1,2}\""));
        assert!(rendered.starts_with("K,{},{1},{2},\"{1,2}\"\n"));
    }

    #[test]
    fn scan_render_for_empty_report() {
        assert_eq!(
            render_scan(&[], OutputFormat::Table),
            "non-integral coefficients: 0\n"
        );
        assert_eq!(render_scan(&[], OutputFormat::Json), "[]\n");
    }
}
