//! Step-by-step replay of the translation arguments that settle lifting for
//! singular and regular characters.
//!
//! Each step carries the weights and factor lists exactly as printed. A step
//! passes when the computed lists agree with the printed ones (as sets, modulo
//! the `(1,…,1)` shift) after applying the registered errata, and the
//! translation certificate is valid. A registered erratum that does not fire,
//! or a printed header that would also give a valid certificate, fails the
//! step; so does any unregistered discrepancy.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::tables::{check_sing1_table, check_sing2_table, check_regular_figure, RowStatus, TableCheck};
use crate::text::{parse_barred, parse_sum, write_sum};
use crate::translation::{check_equisingular, check_oneway, TranslationCertificate, TranslationDirection};
use crate::weight::{PDomWeight, Weight6};

/// A misprint: at `location`, the item `role` reads `printed` and should read
/// `corrected`. `role` is a header weight (`E'`), a factor list (`F⊗W`) or a
/// table row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Erratum {
    pub location: &'static str,
    pub role: &'static str,
    pub printed: &'static str,
    pub corrected: &'static str,
}

impl fmt::Display for Erratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: printed {}, corrected {}",
            self.location, self.role, self.printed, self.corrected
        )
    }
}

pub const ERRATA: [Erratum; 9] = [
    Erratum {
        location: "sing2 abbccd",
        role: "row",
        printed: "(abc|bcd) -> (bcd|abc)",
        corrected: "(bcd|abc) -> (abc|bcd)",
    },
    Erratum {
        location: "singular (A)",
        role: "F'⊗W*",
        printed: "(543|320)",
        corrected: "(542|320)",
    },
    Erratum {
        location: "singular (B)",
        role: "E'",
        printed: "(310|432)",
        corrected: "(210|432)",
    },
    Erratum {
        location: "singular (B)",
        role: "F'",
        printed: "(432|310)",
        corrected: "(432|210)",
    },
    Erratum {
        location: "singular (C)",
        role: "F'⊗W*",
        printed: "(543|320)",
        corrected: "(543|420)",
    },
    Erratum {
        location: "singular (D)",
        role: "F⊗W",
        printed: "(432|310)",
        corrected: "(432|320)",
    },
    // the header of case (C) repeats F1, F2 of case (B)
    Erratum {
        location: "regular (C)",
        role: "F1",
        printed: "(432|510)",
        corrected: "(540|321)",
    },
    Erratum {
        location: "regular (C)",
        role: "F2",
        printed: "(431|520)",
        corrected: "(530|421)",
    },
    Erratum {
        location: "regular (D)",
        role: "F⊗W",
        printed: "(432|312)",
        corrected: "(432|321)",
    },
];

/// Every registered erratum, in report order.
pub fn errata() -> impl Iterator<Item = &'static Erratum> {
    ERRATA.iter()
}

struct Blueprint {
    group: &'static str,
    label: &'static str,
    direction: TranslationDirection,
    k: i64,
    /// Equisingular: `F, E, F', E'`. One-way: `E, F, E1, E2, F1, F2`.
    header: &'static [(&'static str, &'static str)],
    blocks: &'static [(&'static str, &'static str)],
}

const SINGULAR: [Blueprint; 6] = [
    Blueprint {
        group: "singular",
        label: "sing2-base",
        direction: TranslationDirection::Equisingular,
        k: 2,
        header: &[("F", "(310|210)"), ("E", "(210|310)"), ("F'", "(321|210)"), ("E'", "(210|321)")],
        blocks: &[
            ("F⊗W", "(420|210)+(321|210)+(410|310)+(320|310)+(310|320)"),
            ("E⊗W", "(320|310)+(310|410)+(310|320)+(210|420)+(210|321)"),
            ("F'⊗W*", "(432|310)+(431|320)+(421|321)"),
            ("E'⊗W*", "(321|421)+(320|431)+(310|432)"),
        ],
    },
    Blueprint {
        group: "singular",
        label: "sing2-oneway",
        direction: TranslationDirection::OneWay,
        k: 2,
        header: &[
            ("E", "(210|321)"),
            ("F", "(321|210)"),
            ("E1", "(210|431)"),
            ("E2", "(310|421)"),
            ("F1", "(431|210)"),
            ("F2", "(421|310)"),
        ],
        blocks: &[
            ("F⊗W", "(431|210)+(421|310)+(321|320)"),
            ("E⊗W", "(320|321)+(310|421)+(210|431)"),
            ("F1⊗W*", "(542|310)+(541|320)+(532|320)+(531|321)+(432|321)"),
        ],
    },
    Blueprint {
        group: "singular",
        label: "(A)",
        direction: TranslationDirection::Equisingular,
        k: 1,
        header: &[("F", "(430|210)"), ("E", "(210|430)"), ("F'", "(431|210)"), ("E'", "(210|431)")],
        blocks: &[
            ("E⊗W", "(310|430)+(210|530)+(210|431)"),
            ("F⊗W", "(530|210)+(431|210)+(430|310)"),
            ("E'⊗W*", "(321|541)+(321|532)+(320|542)"),
            ("F'⊗W*", "(543|320)+(541|321)+(532|321)"),
        ],
    },
    Blueprint {
        group: "singular",
        label: "(B)",
        direction: TranslationDirection::Equisingular,
        k: 1,
        header: &[("F", "(431|210)"), ("E", "(210|431)"), ("F'", "(432|310)"), ("E'", "(310|432)")],
        blocks: &[
            ("E⊗W", "(310|431)+(210|531)+(210|432)"),
            ("F⊗W", "(531|210)+(432|210)+(431|310)"),
            ("E'⊗W*", "(321|542)+(320|543)"),
            ("F'⊗W*", "(543|320)+(542|321)"),
        ],
    },
    Blueprint {
        group: "singular",
        label: "(C)",
        direction: TranslationDirection::Equisingular,
        k: 1,
        header: &[("F", "(432|210)"), ("E", "(210|432)"), ("F'", "(432|310)"), ("E'", "(310|432)")],
        blocks: &[
            ("E⊗W", "(310|432)+(210|532)"),
            ("F⊗W", "(532|210)+(432|310)"),
            ("E'⊗W*", "(421|542)+(420|543)+(321|543)"),
            ("F'⊗W*", "(543|320)+(543|321)+(542|421)"),
        ],
    },
    Blueprint {
        group: "singular",
        label: "(D)",
        direction: TranslationDirection::Equisingular,
        k: 1,
        header: &[("F", "(432|310)"), ("E", "(310|432)"), ("F'", "(432|410)"), ("E'", "(410|432)")],
        blocks: &[
            ("E⊗W", "(410|432)+(320|432)+(310|532)"),
            ("F⊗W", "(532|310)+(432|410)+(432|310)"),
            ("E'⊗W*", "(521|542)+(520|543)+(421|543)"),
            ("F'⊗W*", "(543|520)+(543|421)+(542|521)"),
        ],
    },
];

const REGULAR: [Blueprint; 5] = [
    Blueprint {
        group: "regular",
        label: "(A)",
        direction: TranslationDirection::OneWay,
        k: 4,
        header: &[
            ("E", "(410|321)"),
            ("F", "(421|310)"),
            ("E1", "(510|432)"),
            ("E2", "(520|431)"),
            ("F1", "(532|410)"),
            ("F2", "(531|420)"),
        ],
        blocks: &[
            ("E⊗W", "(521|421)+(520|431)+(421|431)+(510|432)+(420|432)"),
            (
                "F⊗W",
                "(532|410)+(532|320)+(531|420)+(531|321)+(432|420)+(432|321)+(521|421)+(431|421)",
            ),
            (
                "F1⊗W*",
                "(642|410)+(543|410)+(632|510)+(632|420)+(542|510)+(542|420)+(532|520)+(532|421)",
            ),
        ],
    },
    Blueprint {
        group: "regular",
        label: "(B)",
        direction: TranslationDirection::OneWay,
        k: 4,
        header: &[
            ("E", "(310|421)"),
            ("F", "(321|410)"),
            ("E1", "(410|532)"),
            ("E2", "(420|531)"),
            ("F1", "(432|510)"),
            ("F2", "(431|520)"),
        ],
        blocks: &[
            (
                "E⊗W",
                "(421|521)+(421|431)+(420|531)+(420|432)+(321|531)+(321|432)+(410|532)+(320|532)",
            ),
            ("F⊗W", "(432|510)+(432|420)+(431|520)+(431|421)+(421|521)"),
            ("F1⊗W*", "(542|510)+(532|610)+(532|520)+(432|620)+(321|410)"),
        ],
    },
    Blueprint {
        group: "regular",
        label: "(C)",
        direction: TranslationDirection::OneWay,
        k: 2,
        header: &[
            ("E", "(320|431)"),
            ("F", "(430|321)"),
            ("E1", "(320|541)"),
            ("E2", "(420|531)"),
            ("F1", "(432|510)"),
            ("F2", "(431|520)"),
        ],
        blocks: &[
            (
                "E⊗W",
                "(430|431)+(421|431)+(420|531)+(420|432)+(321|531)+(321|432)+(320|541)+(320|532)",
            ),
            ("F⊗W", "(540|321)+(531|321)+(530|421)+(431|421)+(430|431)"),
        ],
    },
    Blueprint {
        group: "regular",
        label: "(D)",
        direction: TranslationDirection::OneWay,
        k: 2,
        header: &[
            ("E", "(321|430)"),
            ("F", "(431|320)"),
            ("E1", "(321|540)"),
            ("E2", "(421|530)"),
            ("F1", "(541|320)"),
            ("F2", "(531|420)"),
        ],
        blocks: &[
            ("E⊗W", "(431|430)+(421|530)+(421|431)+(321|540)+(321|531)"),
            (
                "F⊗W",
                "(541|320)+(532|320)+(531|420)+(531|321)+(432|420)+(432|312)+(431|430)+(431|421)",
            ),
        ],
    },
    Blueprint {
        group: "regular",
        label: "(E)",
        direction: TranslationDirection::OneWay,
        k: 2,
        header: &[
            ("E", "(310|432)"),
            ("F", "(432|310)"),
            ("E1", "(310|542)"),
            ("E2", "(410|532)"),
            ("F1", "(542|310)"),
            ("F2", "(532|410)"),
        ],
        blocks: &[
            ("E⊗W", "(420|432)+(321|432)+(410|532)+(320|532)+(310|542)"),
            ("F⊗W", "(542|310)+(532|410)+(532|320)+(432|420)+(432|321)"),
        ],
    },
];

/// One printed factor list against the computed one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCheck {
    pub label: &'static str,
    pub printed: Vec<Weight6>,
    /// The printed list after errata.
    pub expected: Vec<Weight6>,
    pub computed: Vec<PDomWeight>,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayStep {
    pub group: &'static str,
    pub label: &'static str,
    /// Header weights after errata, in blueprint order.
    pub header: Vec<(&'static str, PDomWeight)>,
    pub blocks: Vec<BlockCheck>,
    pub certificate: TranslationCertificate,
    /// Errata applied in this step.
    pub flags: Vec<Erratum>,
    /// Problems with the errata themselves: not firing, or not needed.
    pub erratum_problems: Vec<String>,
}

impl ReplayStep {
    pub fn pass(&self) -> bool {
        self.blocks.iter().all(|b| b.matches) && self.certificate.is_valid() && self.erratum_problems.is_empty()
    }

    fn location(&self) -> String {
        format!("{} {}", self.group, self.label)
    }
}

fn normalized_set(ws: impl IntoIterator<Item = Weight6>) -> Vec<Weight6> {
    let mut v: Vec<Weight6> = ws.into_iter().map(|w| w.normalized()).collect();
    v.sort_unstable();
    v
}

fn parse_weight(text: &str) -> PDomWeight {
    text.parse().expect("blueprint weights are well formed")
}

fn run(bp: &Blueprint) -> ReplayStep {
    let location = format!("{} {}", bp.group, bp.label);
    let mut flags = Vec::new();
    let mut problems = Vec::new();
    let relevant: Vec<&Erratum> = errata().filter(|e| e.location == location).collect();

    let printed_header: Vec<(&str, PDomWeight)> = bp.header.iter().map(|&(r, w)| (r, parse_weight(w))).collect();
    let mut header = printed_header.clone();
    for e in relevant.iter().filter(|e| !e.role.contains('⊗')) {
        match header.iter_mut().find(|(r, _)| *r == e.role) {
            Some(slot) if slot.1 == parse_weight(e.printed) => {
                slot.1 = parse_weight(e.corrected);
                flags.push(**e);
            }
            _ => problems.push(format!("erratum does not fire: {e}")),
        }
    }

    let certify = |h: &[(&str, PDomWeight)]| {
        let w: Vec<PDomWeight> = h.iter().map(|p| p.1).collect();
        match bp.direction {
            TranslationDirection::Equisingular => check_equisingular(&w[0], &w[1], &w[2], &w[3], bp.k),
            TranslationDirection::OneWay => check_oneway(&w[0], &w[1], &w[2], &w[3], &w[4], &w[5], bp.k),
        }
        .expect("blueprint modules are in range")
    };
    let certificate = certify(&header);
    if header != printed_header && certify(&printed_header).is_valid() {
        problems.push("printed header already gives a valid certificate".into());
    }

    let lists = certificate.factor_lists();
    let blocks = bp
        .blocks
        .iter()
        .map(|&(label, text)| {
            let printed = parse_sum(text).expect("blueprint sums are well formed");
            let mut expected = printed.clone();
            for e in relevant.iter().filter(|e| e.role == label) {
                let wrong = parse_barred(e.printed).expect("erratum weights are well formed");
                match expected.iter().position(|w| *w == wrong) {
                    Some(i) => {
                        expected[i] = parse_barred(e.corrected).expect("erratum weights are well formed");
                        flags.push(**e);
                    }
                    None => problems.push(format!("erratum does not fire: {e}")),
                }
            }
            let computed = lists
                .iter()
                .find(|l| l.label == label)
                .map(|l| l.weights())
                .unwrap_or_default();
            let matches = normalized_set(expected.iter().copied())
                == normalized_set(computed.iter().map(|w| w.as_weight6()));
            BlockCheck {
                label,
                printed,
                expected,
                computed,
                matches,
            }
        })
        .collect();

    ReplayStep {
        group: bp.group,
        label: bp.label,
        header,
        blocks,
        certificate,
        flags,
        erratum_problems: problems,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayReport {
    pub title: &'static str,
    pub steps: Vec<ReplayStep>,
}

impl ReplayReport {
    pub fn passed(&self) -> usize {
        self.steps.iter().filter(|s| s.pass()).count()
    }

    pub fn failed(&self) -> usize {
        self.steps.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn step(&self, label: &str) -> Option<&ReplayStep> {
        self.steps.iter().find(|s| s.label == label)
    }

    pub fn flags(&self) -> impl Iterator<Item = &Erratum> {
        self.steps.iter().flat_map(|s| s.flags.iter())
    }
}

/// Twisting between singular characters: the base case with `Λ²`, the
/// one-way step into a Sing1 character, and four equisingular chains.
pub fn replay_th6() -> ReplayReport {
    ReplayReport {
        title: "singular characters",
        steps: SINGULAR.iter().map(run).collect(),
    }
}

/// The five one-way translations producing the regular nonstandard arrows.
pub fn replay_th7() -> ReplayReport {
    ReplayReport {
        title: "regular characters",
        steps: REGULAR.iter().map(run).collect(),
    }
}

impl fmt::Display for ReplayStep {
    /// Factor lists one per line, as in the printed computations.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "== {}:", self.location())?;
        for (role, w) in &self.header {
            write!(f, " {role}={w:#}")?;
        }
        writeln!(f, ", W={}", self.certificate.module)?;
        for b in &self.blocks {
            let mut line = String::new();
            write_sum(&mut line, b.computed.iter().map(|w| w.as_weight6()).collect::<Vec<_>>().iter())?;
            writeln!(f, "{} = {}  [{}]", b.label, line, if b.matches { "ok" } else { "MISMATCH" })?;
            if !b.matches {
                let mut printed = String::new();
                write_sum(&mut printed, b.expected.iter())?;
                writeln!(f, "  expected {printed}")?;
            }
        }
        for e in &self.flags {
            writeln!(f, "erratum: {e}")?;
        }
        for p in &self.erratum_problems {
            writeln!(f, "problem: {p}")?;
        }
        for c in self.certificate.failed() {
            writeln!(f, "condition failed: {}: {}", c.name, c.detail)?;
        }
        writeln!(
            f,
            "certificate {}; step {}",
            if self.certificate.is_valid() { "valid" } else { "INVALID" },
            if self.pass() { "PASS" } else { "FAIL" }
        )
    }
}

impl fmt::Display for ReplayReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.title)?;
        for s in &self.steps {
            write!(f, "{s}")?;
        }
        writeln!(f, "{} passed, {} failed", self.passed(), self.failed())
    }
}

/// Both replays plus the golden tables at their printed characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperVerification {
    pub singular: ReplayReport,
    pub regular: ReplayReport,
    pub tables: Vec<TableCheck>,
    /// Table rows that differ from the generator, with their erratum if one
    /// is registered.
    pub table_flags: Vec<(TableCheck, Option<Erratum>)>,
}

impl PaperVerification {
    fn table_ok(&self, t: &TableCheck) -> bool {
        match t.status {
            RowStatus::Match => true,
            _ => self
                .table_flags
                .iter()
                .any(|(c, e)| c == t && e.is_some()),
        }
    }

    /// Every flagged misprint, in report order.
    pub fn flags(&self) -> Vec<Erratum> {
        self.table_flags
            .iter()
            .filter_map(|(_, e)| *e)
            .chain(self.singular.flags().copied())
            .chain(self.regular.flags().copied())
            .collect()
    }

    pub fn all_passed(&self) -> bool {
        self.singular.all_passed() && self.regular.all_passed() && self.tables.iter().all(|t| self.table_ok(t))
    }
}

impl fmt::Display for PaperVerification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# tables")?;
        for t in &self.tables {
            writeln!(f, "{t} [{}]", if self.table_ok(t) { "ok" } else { "FAIL" })?;
        }
        write!(f, "{}{}", self.singular, self.regular)?;
        let flags = self.flags();
        writeln!(f, "# errata ({})", flags.len())?;
        for e in &flags {
            writeln!(f, "{e}")?;
        }
        if self.all_passed() {
            writeln!(f, "all steps passed")
        } else {
            writeln!(f, "verification FAILED")
        }
    }
}

/// Letter form of a two-pair check, matching the erratum texts.
fn letters_of(t: &TableCheck, values: [i64; 4]) -> String {
    t.generated
        .chars()
        .map(|c| match c.to_digit(10) {
            Some(d) => values
                .iter()
                .position(|&v| v == i64::from(d))
                .map_or(c, |i| (b'a' + i as u8) as char),
            None => c,
        })
        .collect()
}

pub fn verify_paper() -> PaperVerification {
    let two = [3, 2, 1, 0];
    let mut tables = check_sing2_table(two);
    tables.extend(check_sing1_table([4, 3, 2, 1, 0]));
    tables.push(check_regular_figure([5, 4, 3, 2, 1, 0]));
    let table_flags = tables
        .iter()
        .filter(|t| t.status != RowStatus::Match)
        .map(|t| {
            let location = format!("{} {}", t.table, t.row);
            let erratum = errata()
                .find(|e| e.location == location && t.table == "sing2" && letters_of(t, two) == e.corrected)
                .copied();
            (t.clone(), erratum)
        })
        .collect();
    PaperVerification {
        singular: replay_th6(),
        regular: replay_th7(),
        tables,
        table_flags,
    }
}
