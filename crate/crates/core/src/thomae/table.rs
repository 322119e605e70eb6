use serde::Serialize;

use super::monomial::SignedMonomial;
use super::rule::d_of_char;
use crate::assets::{Assets, THOMAE_TABLE};
use crate::charspace::Char;
use crate::error::{Error, Result};

fn asset_err(reason: String) -> Error {
    Error::Asset { name: THOMAE_TABLE.into(), reason }
}

/// Rows `(m, D(theta[m]^4))` of the printed table, a blank sign read as `+`.
pub fn parse_table(text: &str) -> Result<Vec<(Char, SignedMonomial)>> {
    let mut rows = Vec::new();
    for entry in text.split("\\cr") {
        let entry = entry.trim();
        if entry.is_empty() {
            continue;
        }
        let open = entry.find('(').ok_or_else(|| asset_err(format!("no characteristic in {entry:?}")))?;
        let close = entry.find(')').ok_or_else(|| asset_err(format!("unclosed characteristic in {entry:?}")))?;
        let bits: Vec<u8> = entry[open + 1..close]
            .split(',')
            .map(|b| b.trim().parse::<u8>().ok().filter(|&v| v <= 1))
            .collect::<Option<_>>()
            .ok_or_else(|| asset_err(format!("bad characteristic in {entry:?}")))?;
        if bits.len() != 6 {
            return Err(asset_err(format!("characteristic needs 6 bits: {entry:?}")));
        }
        let m = Char::from_bits([bits[0], bits[1], bits[2], bits[3], bits[4], bits[5]]);
        let fields: Vec<&str> = entry[close + 1..].split('&').collect();
        if fields.len() != 3 {
            return Err(asset_err(format!("expected sign and monomial fields: {entry:?}")));
        }
        let body = fields[2].trim();
        if body == "0" {
            rows.push((m, SignedMonomial::zero()));
            continue;
        }
        let sign = match fields[1].trim() {
            "" | "+" => 1,
            "-" => -1,
            s => return Err(asset_err(format!("bad sign {s:?}"))),
        };
        let mut factors = Vec::new();
        for piece in body.split("W_").skip(1) {
            let inner = piece.trim_start_matches('{');
            let d: Vec<u8> = inner.bytes().take(2).collect();
            if d.len() != 2 || !d.iter().all(u8::is_ascii_digit) {
                return Err(asset_err(format!("bad factor W_{piece}")));
            }
            factors.push((d[0] - b'0', d[1] - b'0'));
        }
        if factors.len() != body.matches('W').count() {
            return Err(asset_err(format!("unparsed text in {body:?}")));
        }
        rows.push((m, SignedMonomial::new(sign, factors)));
    }
    Ok(rows)
}

#[derive(Clone, Debug, Serialize)]
pub struct TableMismatch {
    pub characteristic: String,
    pub printed: String,
    pub computed: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub rows: usize,
    pub nonzero_rows: usize,
    pub matched: usize,
    pub mismatches: Vec<TableMismatch>,
}

impl TableReport {
    pub fn all_pass(&self) -> bool {
        self.rows == 36 && self.nonzero_rows == 35 && self.mismatches.is_empty()
    }
}

/// Compares every printed row with the generated image.
pub fn verify_table(assets: &Assets) -> Result<TableReport> {
    let rows = parse_table(&assets.text(THOMAE_TABLE)?)?;
    let mut seen = std::collections::BTreeSet::new();
    let mut mismatches = Vec::new();
    let mut matched = 0;
    for (m, printed) in &rows {
        if !seen.insert(*m) {
            return Err(asset_err(format!("duplicate row {m}")));
        }
        let computed = d_of_char(*m)?;
        if &computed == printed {
            matched += 1;
        } else {
            mismatches.push(TableMismatch {
                characteristic: m.to_string(),
                printed: printed.to_string(),
                computed: computed.to_string(),
            });
        }
    }
    Ok(TableReport {
        rows: rows.len(),
        nonzero_rows: rows.iter().filter(|(_, d)| !d.is_zero()).count(),
        matched,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_table_matches() {
        let r = verify_table(&Assets::embedded()).unwrap();
        assert!(r.all_pass(), "{:#?}", r.mismatches);
        assert_eq!(r.matched, 36);
    }

    #[test]
    fn printed_signs() {
        let rows = parse_table(Assets::embedded_text(THOMAE_TABLE).unwrap()).unwrap();
        let sign_of = |bits: [u8; 6]| rows.iter().find(|(m, _)| *m == Char::from_bits(bits)).unwrap().1.sign();
        assert_eq!(sign_of([0, 1, 0, 1, 0, 1]), 1);
        assert_eq!(sign_of([0, 0, 0, 0, 1, 0]), -1);
    }

    #[test]
    fn flipped_sign_is_caught() {
        let text = Assets::embedded_text(THOMAE_TABLE).unwrap().replacen("-&", "&", 1);
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join(THOMAE_TABLE), text).unwrap();
        let r = verify_table(&Assets::with_dir(dir.path())).unwrap();
        assert_eq!(r.mismatches.len(), 1);
    }
}
