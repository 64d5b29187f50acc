//! Reference data for the verification suites. The data files are embedded at
//! build time; setting `VER4_FIXTURES_DIR` reads them from that directory instead.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::comodule::{Character, Gl1pLabel};
use crate::error::{Error, Result};

pub const FIXTURES_ENV: &str = "VER4_FIXTURES_DIR";

const WEIGHT_LISTS: &str = include_str!("../fixtures/weight_lists.json");
const TABLE1: &str = include_str!("../fixtures/table1.json");

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WeightListFixture {
    pub item: usize,
    pub label: String,
    pub dim: usize,
    pub rows: Vec<Vec<String>>,
    #[serde(default)]
    pub isomorphic_to: Option<serde_json::Value>,
    #[serde(default)]
    pub known_discrepancy: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct WeightListFile {
    lists: Vec<WeightListFixture>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Table1Cell {
    pub row: String,
    pub col: String,
    pub value: String,
    #[serde(default)]
    pub known_discrepancy: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Table1Fixture {
    pub labels: Vec<String>,
    pub cells: Vec<Table1Cell>,
}

fn load(name: &str, embedded: &str) -> Result<String> {
    match std::env::var_os(FIXTURES_ENV) {
        Some(dir) => {
            let path = PathBuf::from(dir).join(name);
            std::fs::read_to_string(&path)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
        }
        None => Ok(embedded.to_string()),
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(name: &str, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{name}: {e}")))
}

pub fn weight_lists() -> Result<Vec<WeightListFixture>> {
    let f: WeightListFile = parse_json("weight_lists.json", &load("weight_lists.json", WEIGHT_LISTS)?)?;
    Ok(f.lists)
}

pub fn table1() -> Result<Table1Fixture> {
    parse_json("table1.json", &load("table1.json", TABLE1)?)
}

/// Parses `2 (0, T(2)) + (-1, xi*T(3))` into a multiset of labels.
pub fn parse_character(s: &str) -> Result<Character> {
    let mut out = Character::new();
    for term in s.split('+').map(str::trim).filter(|t| !t.is_empty()) {
        let (k, rest) = match term.find('(') {
            Some(0) => (1, term),
            Some(i) => {
                let k = term[..i]
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad multiplicity in '{term}'")))?;
                (k, &term[i..])
            }
            None => return Err(Error::Parse(format!("expected '(n, label)' in '{term}'"))),
        };
        let label: Gl1pLabel = rest.parse()?;
        *out.entry(label).or_default() += k;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_fixtures_parse() {
        let lists = weight_lists().unwrap();
        assert_eq!(lists.iter().map(|l| l.item).max(), Some(13));
        let t = table1().unwrap();
        assert_eq!(t.cells.len(), 28);
        for c in &t.cells {
            parse_character(&c.value).unwrap();
        }
    }

    #[test]
    fn character_multiplicities() {
        let c = parse_character("(2, 1) + 2 (1, T(1))").unwrap();
        assert_eq!(c.values().sum::<usize>(), 3);
    }
}
