//! Printed classification tables, transcribed with letters standing for
//! character values, and their comparison with the generators.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::combinatorics::k_subsets;
use crate::pattern::{pattern_of, ArrowKind};
use crate::weight::{InfChar, PDomWeight};

/// `(row, source, target)` for two repeated pairs; `a > b > c > d`.
pub const SING2_TABLE: [(&str, &str, &str); 6] = [
    ("aabbcd", "abd|abc", "abc|abd"),
    ("aabccd", "acd|abc", "abc|acd"),
    ("aabcdd", "acd|abd", "abd|acd"),
    ("abbccd", "abc|bcd", "bcd|abc"),
    ("abbcdd", "bcd|abd", "abd|bcd"),
    ("abccdd", "bcd|acd", "acd|bcd"),
];

/// Column labels of the one-repeat table: pairs of the four simple values,
/// named `b > c > d > e` in every row.
pub const SING1_LABELS: [&str; 6] = ["bc", "bd", "be", "cd", "ce", "de"];

/// Rows of the one-repeat table; `a > b > c > d > e`.
pub const SING1_TABLE: [(&str, [&str; 6]); 5] = [
    ("aabcde", ["abc|ade", "abd|ace", "abe|acd", "acd|abe", "ace|abd", "ade|abc"]),
    ("abbcde", ["abc|bde", "abd|bce", "abe|bcd", "bcd|abe", "bce|abd", "bde|abc"]),
    ("abccde", ["abc|cde", "acd|bce", "ace|bcd", "bcd|ace", "bce|acd", "cde|abc"]),
    ("abcdde", ["abd|cde", "acd|bde", "ade|bcd", "bcd|ade", "bde|acd", "cde|abd"]),
    ("abcdee", ["abe|cde", "ace|bde", "ade|bce", "bce|ade", "bde|ace", "cde|abe"]),
];

/// The diamond shared by all rows, between column labels.
pub const SING1_ARROWS: [(&str, &str, ArrowKind); 7] = [
    ("de", "ce", ArrowKind::Standard),
    ("ce", "cd", ArrowKind::Standard),
    ("ce", "be", ArrowKind::Standard),
    ("cd", "bd", ArrowKind::Standard),
    ("be", "bd", ArrowKind::Standard),
    ("bd", "bc", ArrowKind::Standard),
    ("de", "bc", ArrowKind::NonstandardDotted),
];

/// Arrows of the regular diagram by first triples; `a > b > … > f`.
pub const REGULAR_FIGURE: [(&str, &str, ArrowKind); 38] = {
    use ArrowKind::{NonstandardDashed as Dash, NonstandardDotted as Dot, Standard as Std};
    [
        ("def", "cef", Std),
        ("cde", "bde", Std),
        ("cef", "bef", Std),
        ("cef", "cdf", Std),
        ("bcd", "acd", Std),
        ("bde", "bce", Std),
        ("bde", "ade", Std),
        ("cdf", "cde", Std),
        ("cdf", "bdf", Std),
        ("bef", "bdf", Std),
        ("bef", "aef", Std),
        ("acd", "abd", Std),
        ("bce", "bcd", Std),
        ("bce", "ace", Std),
        ("ade", "ace", Std),
        ("bdf", "bde", Std),
        ("bdf", "adf", Std),
        ("bdf", "bcf", Std),
        ("aef", "adf", Std),
        ("abd", "abc", Std),
        ("ace", "acd", Std),
        ("ace", "abe", Std),
        ("bcf", "acf", Std),
        ("bcf", "bce", Std),
        ("adf", "ade", Std),
        ("adf", "acf", Std),
        ("abe", "abd", Std),
        ("acf", "ace", Std),
        ("acf", "abf", Std),
        ("abf", "abe", Std),
        ("def", "bcf", Dot),
        ("cde", "abe", Dot),
        ("cdf", "abf", Dot),
        ("bef", "bcd", Dot),
        ("ade", "abc", Dot),
        ("aef", "acd", Dot),
        ("def", "abc", Dash),
        ("cef", "abd", Dash),
    ]
};

/// Reads `xyz|uvw` with `letter` giving each letter's value. A bare `xyz`
/// takes the second triple from `multiset` minus the first.
pub fn weight_from_letters(text: &str, letter: impl Fn(char) -> i64, multiset: &[i64]) -> Option<PDomWeight> {
    let sorted = |mut v: Vec<i64>| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    };
    let (first, second) = match text.split_once('|') {
        Some((x, y)) => (x.chars().map(&letter).collect(), y.chars().map(&letter).collect()),
        None => {
            let first: Vec<i64> = text.chars().map(&letter).collect();
            let mut rest = multiset.to_vec();
            for v in &first {
                let i = rest.iter().position(|x| x == v)?;
                rest.remove(i);
            }
            (first, rest)
        }
    };
    let (first, second) = (sorted(first), sorted(second));
    if first.len() != 3 || second.len() != 3 {
        return None;
    }
    PDomWeight::new([first[0], first[1], first[2]], [second[0], second[1], second[2]]).ok()
}

fn row_character(row: &str, letter: impl Fn(char) -> i64) -> InfChar {
    let v: Vec<i64> = row.chars().map(letter).collect();
    InfChar::new(core::array::from_fn(|i| v[i])).expect("table rows have at most two repeats")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowStatus {
    Match,
    /// Same pair of weights, opposite direction.
    Reversed,
    Mismatch,
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RowStatus::Match => "match",
            RowStatus::Reversed => "reversed",
            RowStatus::Mismatch => "mismatch",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableCheck {
    pub table: &'static str,
    pub row: &'static str,
    pub status: RowStatus,
    pub printed: String,
    pub generated: String,
}

impl fmt::Display for TableCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} (printed {}, generated {})",
            self.table, self.row, self.status, self.printed, self.generated
        )
    }
}

/// Generates the two-repeat table for `a > b > c > d` and compares each row.
pub fn check_sing2_table(values: [i64; 4]) -> Vec<TableCheck> {
    let letter = |c: char| values[(c as u8 - b'a') as usize];
    SING2_TABLE
        .iter()
        .map(|&(row, src, tgt)| {
            let ic = row_character(row, letter);
            let printed = (
                weight_from_letters(src, letter, &[])
                    .expect("printed table weights are p-dominant")
                    .normalized(),
                weight_from_letters(tgt, letter, &[])
                    .expect("printed table weights are p-dominant")
                    .normalized(),
            );
            let pattern = pattern_of(&ic);
            let arrow = pattern.arrows[0];
            let status = if (arrow.src, arrow.tgt) == printed {
                RowStatus::Match
            } else if (arrow.tgt, arrow.src) == printed {
                RowStatus::Reversed
            } else {
                RowStatus::Mismatch
            };
            TableCheck {
                table: "sing2",
                row,
                status,
                printed: alloc::format!("{:#} -> {:#}", printed.0, printed.1),
                generated: alloc::format!("{:#} -> {:#}", arrow.src, arrow.tgt),
            }
        })
        .collect()
}

/// Generates the one-repeat patterns for `a > b > c > d > e` and compares the
/// six weights per row, their column positions and the seven arrows.
pub fn check_sing1_table(values: [i64; 5]) -> Vec<TableCheck> {
    let letter = |c: char| values[(c as u8 - b'a') as usize];
    SING1_TABLE
        .iter()
        .map(|&(row, entries)| {
            let ic = row_character(row, letter);
            let pattern = pattern_of(&ic);
            let printed: Vec<PDomWeight> = entries
                .iter()
                .map(|e| {
                    weight_from_letters(e, letter, &[])
                        .expect("printed table weights are p-dominant")
                        .normalized()
                })
                .collect();
            let mut ok = pattern.nodes.len() == 6 && pattern.arrows.len() == SING1_ARROWS.len();
            // column label pq names the simple values in positions p, q
            let simple = ic.simple_values();
            let r = ic.repeated_values()[0];
            for (col, sel) in k_subsets(4, 2).iter().enumerate() {
                let mut first = [r, simple[sel[0]], simple[sel[1]]];
                first.sort_unstable_by(|a, b| b.cmp(a));
                ok &= printed[col].first() == first && pattern.contains_node(&printed[col]);
            }
            let column = |l: &str| SING1_LABELS.iter().position(|x| *x == l).expect("known label");
            for (s, t, kind) in SING1_ARROWS {
                let hit = pattern.find_arrow(&printed[column(s)], &printed[column(t)]);
                ok &= hit.is_some_and(|a| a.kind == kind);
            }
            let mut generated = String::new();
            for (i, n) in pattern.nodes.iter().enumerate() {
                if i > 0 {
                    generated.push(' ');
                }
                generated.push_str(&n.weight.compact());
            }
            TableCheck {
                table: "sing1",
                row,
                status: if ok { RowStatus::Match } else { RowStatus::Mismatch },
                printed: entries.join(" "),
                generated,
            }
        })
        .collect()
}

/// Compares the regular pattern of `a > … > f` with the printed diagram:
/// same arrows, same kinds, nothing extra.
pub fn check_regular_figure(values: [i64; 6]) -> TableCheck {
    let ic = InfChar::new(values).expect("regular character");
    let pattern = pattern_of(&ic);
    let letter = |c: char| values[(c as u8 - b'a') as usize];
    let mut missing = Vec::new();
    for (s, t, kind) in REGULAR_FIGURE {
        let src = weight_from_letters(s, letter, &values).expect("figure nodes are p-dominant");
        let tgt = weight_from_letters(t, letter, &values).expect("figure nodes are p-dominant");
        if !pattern.find_arrow(&src, &tgt).is_some_and(|a| a.kind == kind) {
            missing.push(alloc::format!("{s}->{t}"));
        }
    }
    let ok = missing.is_empty() && pattern.arrows.len() == REGULAR_FIGURE.len() && pattern.nodes.len() == 20;
    TableCheck {
        table: "regular",
        row: "figure",
        status: if ok { RowStatus::Match } else { RowStatus::Mismatch },
        printed: alloc::format!("{} arrows", REGULAR_FIGURE.len()),
        generated: if missing.is_empty() {
            alloc::format!("{} arrows, {} nodes", pattern.arrows.len(), pattern.nodes.len())
        } else {
            alloc::format!("missing {}", missing.join(" "))
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_repeat_rows() {
        let checks = check_sing2_table([3, 2, 1, 0]);
        let status: Vec<RowStatus> = checks.iter().map(|c| c.status).collect();
        use RowStatus::*;
        assert_eq!(status, [Match, Match, Match, Reversed, Match, Match]);
        assert_eq!(checks[3].generated, "(210|321) -> (321|210)");
        assert_eq!(checks[0].generated, "(320|321) -> (321|320)");
    }

    #[test]
    fn one_repeat_rows() {
        for c in check_sing1_table([4, 3, 2, 1, 0]) {
            assert_eq!(c.status, RowStatus::Match, "{c}");
        }
        // larger gaps give the same pattern
        for c in check_sing1_table([9, 7, 4, 2, 1]) {
            assert_eq!(c.status, RowStatus::Match, "{c}");
        }
    }

    #[test]
    fn regular_figure() {
        assert_eq!(check_regular_figure([5, 4, 3, 2, 1, 0]).status, RowStatus::Match);
        assert_eq!(check_regular_figure([11, 8, 5, 4, 2, 0]).status, RowStatus::Match);
    }

    #[test]
    fn letters() {
        let v = [5, 4, 3, 2, 1, 0];
        let l = |c: char| v[(c as u8 - b'a') as usize];
        assert_eq!(weight_from_letters("def", l, &v).unwrap().compact(), "(210|543)");
        assert_eq!(weight_from_letters("abd|ace", l, &[]).unwrap().compact(), "(542|531)");
        assert!(weight_from_letters("ab", l, &v).is_none());
    }
}
