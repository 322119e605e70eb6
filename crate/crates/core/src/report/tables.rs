//! Tables regenerated from scratch, rendered as Markdown, CSV or JSON.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::assets::Assets;
use crate::baselocus::{
    collision_table, orbit_of_base_space, printed_cusp_data, variety_and_vanishing_check, LinearSpace, LocusContext,
};
use crate::charspace::combinatorics::{example_sextuplet, same_family};
use crate::charspace::{enumerate_sextuplets, nonzero_evens, singular_subspaces, Char, Subspace};
use crate::error::{Error, Result};
use crate::thetaring::ThetaForms;
use crate::thomae::d_of_char;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableName {
    Thomae,
    Subspaces,
    Baselocus,
    Sextuplets,
}

impl FromStr for TableName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "thomae" => Ok(TableName::Thomae),
            "subspaces" => Ok(TableName::Subspaces),
            "baselocus" => Ok(TableName::Baselocus),
            "sextuplets" => Ok(TableName::Sextuplets),
            _ => Err(Error::Invalid(format!("unknown table {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Markdown,
    Csv,
    Json,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "md" | "markdown" => Ok(TableFormat::Markdown),
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            _ => Err(Error::Invalid(format!("unknown table format {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(title: &str, columns: &[&str]) -> Self {
        Table { title: title.into(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn column(&self, name: &str) -> Option<Vec<&str>> {
        let k = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[k].as_str()).collect())
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("| {} |\n", self.columns.join(" | "));
        out.push_str(&format!("|{}\n", "---|".repeat(self.columns.len())));
        for r in &self.rows {
            out.push_str(&format!("| {} |\n", r.join(" | ")));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let line = |cells: &[String]| cells.iter().map(|c| csv_cell(c)).collect::<Vec<_>>().join(",");
        let mut out = line(&self.columns);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&line(r));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_markdown())
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn digits(chars: &[Char]) -> String {
    chars.iter().map(|m| m.digit().to_string()).collect::<Vec<_>>().join(" ")
}

/// Builds the named table.
pub fn build_table(name: TableName, assets: &Assets) -> Result<Table> {
    match name {
        TableName::Thomae => thomae_table(),
        TableName::Subspaces => subspace_table(assets),
        TableName::Baselocus => baselocus_table(assets),
        TableName::Sextuplets => sextuplet_table(),
    }
}

pub fn render_table(name: TableName, format: TableFormat, assets: &Assets) -> Result<String> {
    let t = build_table(name, assets)?;
    Ok(match format {
        TableFormat::Markdown => t.to_markdown(),
        TableFormat::Csv => t.to_csv(),
        TableFormat::Json => {
            let mut s = serde_json::to_string_pretty(&t).map_err(|e| Error::Invalid(e.to_string()))?;
            s.push('\n');
            s
        }
    })
}

fn thomae_table() -> Result<Table> {
    let mut t = Table::new("Thomae images", &["characteristic", "digit", "sign", "monomial"]);
    for m in nonzero_evens() {
        let d = d_of_char(m)?;
        let body: String = d.factors().iter().map(|(i, j)| format!("W{i}{j}")).collect();
        let sign = if d.sign() < 0 { "-" } else { "+" };
        t.rows.push(vec![m.to_string(), m.digit().to_string(), sign.into(), body]);
    }
    Ok(t)
}

/// The family of maximal totally singular subspaces containing the one
/// where the first half of the characteristic vanishes.
pub fn theta_subspace_family() -> Vec<Subspace> {
    let maximals = singular_subspaces(3);
    let lower = Subspace::span(&[Char::from_digit(1), Char::from_digit(2), Char::from_digit(4)].map(|c| c.expect("digit")));
    let mut family: Vec<Subspace> = maximals.into_iter().filter(|s| same_family(s, &lower)).collect();
    family.sort_by_key(|s| {
        let mut d: Vec<u8> = s.nonzero_elements().iter().map(|m| m.digit()).collect();
        d.sort();
        d
    });
    family
}

fn subspace_table(assets: &Assets) -> Result<Table> {
    let printed = ThetaForms::load(assets).ok();
    let mut t = Table::new("Theta subspaces", &["elements", "printed label"]);
    for s in theta_subspace_family() {
        let mut elems = s.nonzero_elements();
        elems.sort();
        let label = printed
            .as_ref()
            .and_then(|p| p.index_of(&s))
            .map_or("-".to_string(), |i| format!("A{}", i + 1));
        t.rows.push(vec![digits(&elems), label]);
    }
    Ok(t)
}

/// `(Y2, Y3 - Y5, ...)` from the reduced forms.
pub fn render_ideal(s: &LinearSpace) -> String {
    let forms: Vec<String> = s.forms().iter().map(|f| render_form(f)).collect();
    format!("({})", forms.join(", "))
}

fn render_form(f: &[i64]) -> String {
    let mut out = String::new();
    for (i, &c) in f.iter().enumerate().filter(|(_, &c)| c != 0) {
        let sign = if c < 0 { "-" } else { "+" };
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        if c.abs() != 1 {
            out.push_str(&c.abs().to_string());
        }
        out.push_str(&format!("Y{}", i + 1));
    }
    out
}

fn baselocus_table(assets: &Assets) -> Result<Table> {
    let orbit = orbit_of_base_space(assets)?;
    let (printed, _) = printed_cusp_data(assets)?;
    let ctx = LocusContext::new(assets)?;
    let collisions = collision_table(&ctx, 1)?;
    let mut t = Table::new(
        "Base locus components",
        &["index", "ideal", "collision", "vanishing", "triplet", "printed"],
    );
    for (k, s) in orbit.members.iter().enumerate() {
        let r = variety_and_vanishing_check(&ctx, &collisions, s)?;
        let join = |v: &[u8]| v.iter().map(u8::to_string).collect::<Vec<_>>().join(" ");
        t.rows.push(vec![
            (k + 1).to_string(),
            render_ideal(s),
            r.collision.map_or("-".into(), |c| join(&c)),
            join(&r.vanishing),
            r.triplet.map_or("-".into(), |c| join(&c)),
            if printed.contains(s) { "yes" } else { "no" }.into(),
        ]);
    }
    Ok(t)
}

fn sextuplet_table() -> Result<Table> {
    let mut example = example_sextuplet();
    example.sort();
    let mut t = Table::new("Sextuplets", &["members", "triplet", "worked example"]);
    for s in enumerate_sextuplets() {
        let triplet = crate::baselocus::triplet_for(&s[1..])
            .map_or("-".into(), |t| digits(&t));
        t.rows.push(vec![digits(&s), triplet, if s == example { "yes" } else { "no" }.into()]);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assets::THOMAE_TABLE;
    use crate::thetaring::forms::parse_digit_lists;
    use crate::thomae::parse_table;

    #[test]
    fn thomae_table_matches_the_asset() {
        let t = build_table(TableName::Thomae, &Assets::embedded()).unwrap();
        assert_eq!(t.rows.len(), 35);
        let printed = parse_table(&Assets::embedded().text(THOMAE_TABLE).unwrap()).unwrap();
        for row in &t.rows {
            let (_, d) = printed.iter().find(|(m, _)| m.to_string() == row[0]).unwrap();
            assert_eq!(d.to_string(), format!("{}{}", row[2], row[3]));
        }
    }

    #[test]
    fn subspace_table_matches_the_asset() {
        let t = build_table(TableName::Subspaces, &Assets::embedded()).unwrap();
        assert_eq!(t.rows.len(), 15);
        let mut printed: Vec<String> = parse_digit_lists(&Assets::embedded().text(crate::assets::THETA_SUBSPACES).unwrap())
            .unwrap()
            .iter()
            .map(|s| {
                let mut v = s.to_vec();
                v.sort();
                digits(&v)
            })
            .collect();
        printed.sort();
        let mut ours: Vec<String> = t.column("elements").unwrap().iter().map(|s| s.to_string()).collect();
        ours.sort();
        assert_eq!(ours, printed);
        assert!(t.column("printed label").unwrap().iter().all(|l| *l != "-"));
    }

    #[test]
    fn sextuplet_table_has_the_example() {
        let t = build_table(TableName::Sextuplets, &Assets::embedded()).unwrap();
        assert_eq!(t.rows.len(), 56);
        assert_eq!(t.column("worked example").unwrap().iter().filter(|v| **v == "yes").count(), 1);
        assert!(t.column("triplet").unwrap().iter().all(|v| *v != "-"));
    }

    #[test]
    fn baselocus_table_lists_the_printed_ideals() {
        let t = build_table(TableName::Baselocus, &Assets::embedded()).unwrap();
        assert_eq!(t.rows.len(), 56);
        assert_eq!(t.column("printed").unwrap().iter().filter(|v| **v == "yes").count(), 8);
        assert_eq!(t.rows[0][1], "(Y2, Y3, Y5, Y6, Y8, Y9, Y10, Y11, Y13, Y14)");
    }

    #[test]
    fn renderings() {
        let mut t = Table::new("x", &["a", "b"]);
        t.rows.push(vec!["1".into(), "p, q".into()]);
        assert_eq!(t.to_csv(), "a,b\n1,\"p, q\"\n");
        assert_eq!(t.to_markdown(), "| a | b |\n|---|---|\n| 1 | p, q |\n");
        assert_eq!(serde_json::to_string(&t).unwrap(), r#"{"title":"x","columns":["a","b"],"rows":[["1","p, q"]]}"#);
    }
}
