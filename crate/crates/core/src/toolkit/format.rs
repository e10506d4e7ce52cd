//! TOML instance files.
//!
//! ```toml
//! format = "boilfp-instance"
//! version = 1
//! n = 2
//! m = 2
//! k = 3
//! a = [[-1, 4], [2, -1]]
//! b = [0, 8]
//!
//! [[criteria]]
//! num = [1, 0]
//! num_const = -4
//! den = [0, -1]
//! den_const = 2
//! # ... k criteria blocks, then exactly two [[utility]] blocks
//! ```
//!
//! Numbers are integers or `"p/q"` strings. Decimal literals are rejected so
//! that values survive a round trip exactly.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{AffineForm, FractionalObjective, ProblemInstance};
use crate::rational::Rational;

pub const FORMAT_NAME: &str = "boilfp-instance";
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum Lit {
    Int(i64),
    Text(String),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawObjective {
    num: Vec<Lit>,
    num_const: Lit,
    den: Vec<Lit>,
    den_const: Lit,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    format: String,
    version: u32,
    n: usize,
    m: usize,
    k: usize,
    a: Vec<Vec<Lit>>,
    b: Vec<Lit>,
    criteria: Vec<RawObjective>,
    utility: Vec<RawObjective>,
}

fn lit(v: &Rational) -> Lit {
    match v.to_bigint().and_then(|i| i64::try_from(i).ok()) {
        Some(i) => Lit::Int(i),
        None => Lit::Text(v.to_string()),
    }
}

fn raw_objective(o: &FractionalObjective) -> RawObjective {
    RawObjective {
        num: o.numerator.coeffs.iter().map(lit).collect(),
        num_const: lit(&o.numerator.constant),
        den: o.denominator.coeffs.iter().map(lit).collect(),
        den_const: lit(&o.denominator.constant),
    }
}

pub fn to_string(instance: &ProblemInstance) -> String {
    let raw = RawInstance {
        format: FORMAT_NAME.to_string(),
        version: FORMAT_VERSION,
        n: instance.n(),
        m: instance.m(),
        k: instance.k(),
        a: instance.a.iter().map(|r| r.iter().map(lit).collect()).collect(),
        b: instance.b.iter().map(lit).collect(),
        criteria: instance.criteria.iter().map(raw_objective).collect(),
        utility: instance.utility.iter().map(raw_objective).collect(),
    };
    toml::to_string(&raw).expect("instance serializes")
}

pub fn save(instance: &ProblemInstance, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, to_string(instance))?;
    Ok(())
}

pub fn load(path: impl AsRef<Path>) -> Result<ProblemInstance> {
    from_str(&std::fs::read_to_string(path)?)
}

fn line_of_offset(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

/// Line of `key = ...`, inside the `occurrence`-th `[[table]]` when given.
fn locate(text: &str, table: Option<(&str, usize)>, key: &str) -> usize {
    let mut seen: Option<usize> = None;
    let mut in_table = table.is_none();
    for (no, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.starts_with('[') {
            in_table = match table {
                Some((name, occ)) if t == format!("[[{name}]]") => {
                    let count = seen.map_or(0, |c| c + 1);
                    seen = Some(count);
                    count == occ
                }
                _ => false,
            };
            if table.is_none() {
                // Top-level keys end at the first table header.
                break;
            }
            continue;
        }
        if in_table {
            if let Some(rest) = t.strip_prefix(key) {
                if rest.trim_start().starts_with('=') {
                    return no + 1;
                }
            }
        }
    }
    0
}

fn parse_error(text: &str, table: Option<(&str, usize)>, key: &str, message: String) -> Error {
    let field = match table {
        Some((name, i)) => format!("{name}[{i}].{key}"),
        None => key.to_string(),
    };
    Error::Parse {
        line: locate(text, table, key),
        field,
        message,
    }
}

fn from_toml_error(text: &str, e: toml::de::Error) -> Error {
    let msg = e.message().to_string();
    let line = e.span().map_or(0, |s| line_of_offset(text, s.start));
    let field = if let Some(start) = msg.find('`') {
        msg[start + 1..]
            .split('`')
            .next()
            .unwrap_or_default()
            .to_string()
    } else {
        e.span()
            .and_then(|s| {
                let line_start = text[..s.start.min(text.len())].rfind('\n').map_or(0, |p| p + 1);
                text[line_start..].split('=').next().map(|k| k.trim().to_string())
            })
            .unwrap_or_default()
    };
    let message = if msg.contains("untagged") {
        "expected an integer or a \"p/q\" string".to_string()
    } else {
        msg
    };
    Error::Parse {
        line,
        field,
        message,
    }
}

pub fn from_str(text: &str) -> Result<ProblemInstance> {
    let raw: RawInstance = toml::from_str(text).map_err(|e| from_toml_error(text, e))?;
    let top = |key: &str, message: String| parse_error(text, None, key, message);
    if raw.format != FORMAT_NAME {
        return Err(top("format", format!("expected \"{FORMAT_NAME}\"")));
    }
    if raw.version != FORMAT_VERSION {
        return Err(top("version", format!("unsupported version {}", raw.version)));
    }
    let value = |l: &Lit, table: Option<(&str, usize)>, key: &str| -> Result<Rational> {
        match l {
            Lit::Int(i) => Ok(Rational::from(*i)),
            Lit::Text(s) => s
                .parse()
                .map_err(|_| parse_error(text, table, key, format!("invalid rational literal \"{s}\""))),
        }
    };
    let vector = |ls: &[Lit], len: usize, table: Option<(&str, usize)>, key: &str| -> Result<Vec<Rational>> {
        if ls.len() != len {
            return Err(parse_error(
                text,
                table,
                key,
                format!("expected {len} entries, found {}", ls.len()),
            ));
        }
        ls.iter().map(|l| value(l, table, key)).collect()
    };
    let (n, m, k) = (raw.n, raw.m, raw.k);
    if raw.a.len() != m {
        return Err(top("a", format!("expected {m} rows, found {}", raw.a.len())));
    }
    let a = raw
        .a
        .iter()
        .map(|row| vector(row, n, None, "a"))
        .collect::<Result<Vec<_>>>()?;
    let b = vector(&raw.b, m, None, "b")?;
    let objective = |o: &RawObjective, name: &str, i: usize| -> Result<FractionalObjective> {
        let t = Some((name, i));
        Ok(FractionalObjective::new(
            AffineForm::new(vector(&o.num, n, t, "num")?, value(&o.num_const, t, "num_const")?),
            AffineForm::new(vector(&o.den, n, t, "den")?, value(&o.den_const, t, "den_const")?),
        ))
    };
    if raw.criteria.len() != k {
        return Err(top("k", format!("k = {k} but {} criteria blocks given", raw.criteria.len())));
    }
    if k < 2 {
        return Err(top("k", "at least 2 criteria are required".to_string()));
    }
    if raw.utility.len() != 2 {
        return Err(parse_error(
            text,
            None,
            "utility",
            format!("expected 2 utility blocks, found {}", raw.utility.len()),
        ));
    }
    let criteria = raw
        .criteria
        .iter()
        .enumerate()
        .map(|(i, o)| objective(o, "criteria", i))
        .collect::<Result<Vec<_>>>()?;
    let utility = [
        objective(&raw.utility[0], "utility", 0)?,
        objective(&raw.utility[1], "utility", 1)?,
    ];
    ProblemInstance::new(a, b, criteria, utility)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::worked_example;
    use crate::rational::rat;

    #[test]
    fn round_trip_worked_example() {
        let inst = worked_example();
        let text = to_string(&inst);
        assert!(text.contains("format = \"boilfp-instance\""));
        assert_eq!(from_str(&text).unwrap(), inst);
    }

    #[test]
    fn round_trip_fractions_and_big_values() {
        let mut inst = worked_example();
        inst.b[1] = rat(17, 3);
        inst.a[0][0] = "-123456789012345678901234567890".parse().unwrap();
        let back = from_str(&to_string(&inst)).unwrap();
        assert_eq!(back, inst);
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("x.toml");
        save(&worked_example(), &path).unwrap();
        assert_eq!(load(&path).unwrap(), worked_example());
    }

    fn without_line(text: &str, prefix: &str) -> String {
        text.lines()
            .filter(|l| !l.starts_with(prefix))
            .collect::<Vec<_>>()
            .join("\n")
    }

    #[test]
    fn missing_k_is_reported() {
        let text = without_line(&to_string(&worked_example()), "k = ");
        match from_str(&text) {
            Err(Error::Parse { field, .. }) => assert_eq!(field, "k"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn decimal_literal_is_rejected() {
        let text = to_string(&worked_example()).replace("b = [0, 8]", "b = [0, 8.5]");
        match from_str(&text) {
            Err(Error::Parse { line, field, .. }) => {
                assert_eq!(field, "b");
                assert_eq!(line, locate(&text, None, "b"));
                assert!(line > 0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn wrong_length_names_the_block() {
        let text = to_string(&worked_example());
        // Drop one coefficient from the second criterion's numerator.
        let mut seen = 0;
        let edited: Vec<String> = text
            .lines()
            .map(|l| {
                if l.starts_with("num = ") {
                    seen += 1;
                    if seen == 2 {
                        return "num = [-1]".to_string();
                    }
                }
                l.to_string()
            })
            .collect();
        let edited = edited.join("\n");
        match from_str(&edited) {
            Err(Error::Parse { line, field, .. }) => {
                assert_eq!(field, "criteria[1].num");
                assert_eq!(edited.lines().nth(line - 1).unwrap(), "num = [-1]");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bad_fraction_string() {
        let text = to_string(&worked_example()).replace("b = [0, 8]", "b = [0, \"8/0\"]");
        assert!(matches!(from_str(&text), Err(Error::Parse { .. })));
    }
}
