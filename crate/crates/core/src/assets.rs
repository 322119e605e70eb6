//! Verbatim transcriptions of published tables and formulas.
//!
//! Every asset is compiled into the library. An [`Assets`] value may point at
//! a directory whose files take precedence, which is how mutated copies are
//! checked.

use std::borrow::Cow;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

pub const KOIKE_GENERATORS: &str = "koike_generators.txt";
pub const THOMAE_TABLE: &str = "thomae_table.txt";
pub const THETA_SUBSPACES: &str = "theta_subspaces.txt";
pub const CUBIC_RELATION: &str = "cubic_relation.txt";
pub const THETA4_EXAMPLE: &str = "theta4_example.txt";
pub const Y_CUBIC_EXAMPLE: &str = "y_cubic_example.txt";
pub const P_POLY: &str = "p_poly.txt";
pub const Q_POLY: &str = "q_poly.txt";
pub const BASE_IDEAL_EXAMPLE: &str = "base_ideal_example.txt";
pub const CUSP_EIGHT_IDEALS: &str = "cusp_eight_ideals.txt";

const EMBEDDED: &[(&str, &str)] = &[
    (KOIKE_GENERATORS, include_str!("../assets/koike_generators.txt")),
    (THOMAE_TABLE, include_str!("../assets/thomae_table.txt")),
    (THETA_SUBSPACES, include_str!("../assets/theta_subspaces.txt")),
    (CUBIC_RELATION, include_str!("../assets/cubic_relation.txt")),
    (THETA4_EXAMPLE, include_str!("../assets/theta4_example.txt")),
    (Y_CUBIC_EXAMPLE, include_str!("../assets/y_cubic_example.txt")),
    (P_POLY, include_str!("../assets/p_poly.txt")),
    (Q_POLY, include_str!("../assets/q_poly.txt")),
    (BASE_IDEAL_EXAMPLE, include_str!("../assets/base_ideal_example.txt")),
    (CUSP_EIGHT_IDEALS, include_str!("../assets/cusp_eight_ideals.txt")),
];

#[derive(Clone, Debug, Default)]
pub struct Assets {
    dir: Option<PathBuf>,
}

impl Assets {
    pub fn embedded() -> Self {
        Assets { dir: None }
    }

    /// Files present in `dir` override the embedded copies.
    pub fn with_dir(dir: impl AsRef<Path>) -> Self {
        Assets {
            dir: Some(dir.as_ref().to_path_buf()),
        }
    }

    pub fn names() -> impl Iterator<Item = &'static str> {
        EMBEDDED.iter().map(|(n, _)| *n)
    }

    pub fn embedded_text(name: &str) -> Option<&'static str> {
        EMBEDDED.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
    }

    pub fn text(&self, name: &str) -> Result<Cow<'static, str>> {
        if let Some(dir) = &self.dir {
            let path = dir.join(name);
            if path.exists() {
                return Ok(Cow::Owned(std::fs::read_to_string(path)?));
            }
        }
        Self::embedded_text(name).map(Cow::Borrowed).ok_or_else(|| Error::Asset {
            name: name.to_string(),
            reason: "unknown asset".into(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_assets_are_embedded_and_nonempty() {
        for n in Assets::names() {
            assert!(!Assets::embedded().text(n).unwrap().trim().is_empty(), "{n}");
        }
        assert!(Assets::embedded().text("missing.txt").is_err());
    }

    #[test]
    fn directory_overrides() {
        let dir = std::env::temp_dir().join(format!("octad-assets-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(dir.join(P_POLY), "F_0^2").unwrap();
        let a = Assets::with_dir(&dir);
        assert_eq!(a.text(P_POLY).unwrap(), "F_0^2");
        assert_eq!(a.text(Q_POLY).unwrap(), Assets::embedded_text(Q_POLY).unwrap());
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
