//! The `.l3g` text format.
//!
//! ```text
//! # optional comment lines
//! n m
//! a b c      (m lines, 0-based vertex ids)
//! ```
//!
//! Input accepts ids in any order and any amount of inline whitespace; output
//! writes each triple ascending, separated by single spaces.

use std::fmt::Write as _;

use super::LinearTripleSystem;
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<LinearTripleSystem> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| Error::Syntax {
        line: 1,
        message: "missing `n m` header".into(),
    })?;
    let [n, m] = numbers::<2>(header_line, header)?;

    let mut triples = Vec::with_capacity(m.min(1 << 20));
    let mut last_line = header_line;
    for (line_no, line) in lines {
        if triples.len() == m {
            return Err(Error::Syntax {
                line: line_no,
                message: format!("header declares {m} triples but more follow"),
            });
        }
        triples.push(numbers::<3>(line_no, line)?);
        last_line = line_no;
    }
    if triples.len() != m {
        return Err(Error::Syntax {
            line: last_line + 1,
            message: format!("header declares {m} triples, found {}", triples.len()),
        });
    }
    LinearTripleSystem::validate(n, &triples)
}

fn numbers<const N: usize>(line: usize, text: &str) -> Result<[usize; N]> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != N {
        return Err(Error::Syntax {
            line,
            message: format!("expected {N} integers, found {} fields", fields.len()),
        });
    }
    let mut out = [0usize; N];
    for (slot, field) in out.iter_mut().zip(fields) {
        *slot = field.parse().map_err(|_| Error::Syntax {
            line,
            message: format!("`{field}` is not a non-negative integer"),
        })?;
    }
    Ok(out)
}

pub fn serialize(system: &LinearTripleSystem) -> String {
    let mut out = String::with_capacity(16 + 12 * system.m());
    let _ = writeln!(out, "{} {}", system.n(), system.m());
    for t in system.edges() {
        let [a, b, c] = t.vertices();
        let _ = writeln!(out, "{a} {b} {c}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_single_triple() {
        let h = parse("3 1\n0 1 2\n").unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.m(), 1);
    }

    #[test]
    fn comments_and_unsorted_input() {
        let h = parse("# fano fragment\n7 2\n2 1 0\n# mid\n4  3 0\n").unwrap();
        assert_eq!(serialize(&h), "7 2\n0 1 2\n0 3 4\n");
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        assert_eq!(
            parse("3 1\n0 1\n").unwrap_err(),
            Error::Syntax {
                line: 2,
                message: "expected 3 integers, found 2 fields".into()
            }
        );
        assert!(matches!(parse("3 1\n0 1 x\n"), Err(Error::Syntax { line: 2, .. })));
        assert!(matches!(parse("3 2\n0 1 2\n"), Err(Error::Syntax { line: 3, .. })));
        assert!(matches!(parse("3 0\n0 1 2\n"), Err(Error::Syntax { line: 2, .. })));
        assert!(matches!(parse(""), Err(Error::Syntax { line: 1, .. })));
        assert!(matches!(parse("3 1\n0 -1 2\n"), Err(Error::Syntax { line: 2, .. })));
    }

    #[test]
    fn validation_errors_pass_through() {
        assert!(matches!(
            parse("5 2\n0 1 2\n0 1 3\n"),
            Err(Error::PairCoveredTwice { .. })
        ));
    }

    proptest! {
        #[test]
        fn round_trip_is_canonical(n in 3usize..40, density in 1i128..=10, seed in any::<u64>()) {
            let h = crate::triple_system::generate_random_linear(n, crate::Rational::new(density, 10), seed);
            let text = serialize(&h);
            let back = parse(&text).unwrap();
            prop_assert_eq!(&back, &h);
            prop_assert_eq!(serialize(&back), text);
        }
    }
}
