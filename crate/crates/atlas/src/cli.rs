use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gr33_core::text::parse_weight6;
use gr33_core::{
    alpha_to_dynkin, check_equisingular, check_oneway, dynkin_to_alpha, hom_order, lift_status, pattern_of,
    tensor_with_dual, tensor_with_fundamental, translate_node, verify_paper, Dynkin, InfChar, PDomWeight,
    Weight6,
};

use crate::{dot, json};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "gr33", version, about = "Homomorphism patterns of generalized Verma modules on Gr(3,3)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Character, singularity, grading value and Dynkin labels of a weight.
    Classify {
        /// `(a1,a2,a3|a4,a5,a6)`, `(521|430)`, a plain six-tuple or `[m1,…,m5]`
        #[arg(value_parser = parse_any_weight, allow_hyphen_values = true)]
        weight: Weight6,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The homomorphism pattern of an infinitesimal character.
    Pattern {
        #[arg(value_parser = parse_char, allow_hyphen_values = true)]
        character: InfChar,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decomposition of a weight tensored with Λ^k.
    Tensor {
        #[arg(value_parser = parse_pdom, allow_hyphen_values = true)]
        weight: PDomWeight,
        #[arg(value_parser = clap::value_parser!(i64).range(1..=5))]
        k: i64,
        /// Tensor with the dual (Λ^k)* = Λ^(6-k) instead
        #[arg(long)]
        dual: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Order of the homomorphism between two weights, φ(target) − φ(source).
    Order {
        #[arg(value_parser = parse_pdom, allow_hyphen_values = true)]
        source: PDomWeight,
        #[arg(value_parser = parse_pdom, allow_hyphen_values = true)]
        target: PDomWeight,
    },
    /// Whether the arrow source → target lifts to the semi-holonomic setting.
    LiftStatus {
        #[arg(value_parser = parse_pdom, allow_hyphen_values = true)]
        source: PDomWeight,
        #[arg(value_parser = parse_pdom, allow_hyphen_values = true)]
        target: PDomWeight,
    },
    /// Translation of nodes and checks of the translation hypotheses.
    Translate {
        #[command(subcommand)]
        what: Translate,
    },
    /// Replays every printed computation and table; exit 1 on any failure.
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Writes a pattern as DOT or JSON.
    Export {
        #[arg(value_parser = parse_char, allow_hyphen_values = true)]
        character: InfChar,
        #[arg(long, value_enum)]
        format: ExportFormat,
        /// Output file; standard output when omitted
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Translate {
    /// The unique factor of weight ⊗ W in the target character.
    Node {
        #[arg(value_parser = parse_pdom, allow_hyphen_values = true)]
        weight: PDomWeight,
        #[arg(value_parser = parse_char, allow_hyphen_values = true)]
        target: InfChar,
    },
    /// Hypotheses for moving F → E to F' → E' and back.
    Equisingular {
        #[command(flatten)]
        k: ModuleArg,
        #[arg(value_parser = parse_pdom, allow_hyphen_values = true)]
        f: PDomWeight,
        #[arg(value_parser = parse_pdom, allow_hyphen_values = true)]
        e: PDomWeight,
        #[arg(value_parser = parse_pdom, allow_hyphen_values = true)]
        f_prime: PDomWeight,
        #[arg(value_parser = parse_pdom, allow_hyphen_values = true)]
        e_prime: PDomWeight,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Hypotheses for moving E → F to E1 → F1.
    OneWay {
        #[command(flatten)]
        k: ModuleArg,
        #[arg(value_parser = parse_pdom, allow_hyphen_values = true)]
        e: PDomWeight,
        #[arg(value_parser = parse_pdom, allow_hyphen_values = true)]
        f: PDomWeight,
        #[arg(value_parser = parse_pdom, allow_hyphen_values = true)]
        e1: PDomWeight,
        #[arg(value_parser = parse_pdom, allow_hyphen_values = true)]
        e2: PDomWeight,
        #[arg(value_parser = parse_pdom, allow_hyphen_values = true)]
        f1: PDomWeight,
        #[arg(value_parser = parse_pdom, allow_hyphen_values = true)]
        f2: PDomWeight,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct ModuleArg {
    /// W = Λ^k
    #[arg(long, short, value_parser = clap::value_parser!(i64).range(1..=5))]
    k: i64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ExportFormat {
    Dot,
    Json,
}

fn parse_any_weight(s: &str) -> Result<Weight6, String> {
    if s.trim_start().starts_with('[') {
        return s
            .parse::<Dynkin>()
            .map(dynkin_to_alpha)
            .map_err(|e| e.to_string());
    }
    parse_weight6(s).map_err(|e| e.to_string())
}

fn parse_pdom(s: &str) -> Result<PDomWeight, String> {
    s.parse().map_err(|e: gr33_core::ParseError| e.to_string())
}

fn parse_char(s: &str) -> Result<InfChar, String> {
    s.parse().map_err(|e: gr33_core::ParseError| e.to_string())
}

/// Runs the command line `args` (including the program name). Returns the
/// process exit code: 0 on success, 1 when a check fails, 2 on usage errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

fn usage(err: &mut dyn Write, msg: &str) -> std::io::Result<i32> {
    writeln!(err, "error: {msg}")?;
    Ok(EXIT_USAGE)
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    match command {
        Command::Classify { weight, format } => classify(&weight, format, out, err),
        Command::Pattern { character, format } => {
            let p = pattern_of(&character);
            match format {
                Format::Text => {
                    write!(out, "{}", pattern_text(&p))?;
                }
                Format::Json => out.write_all(json::render(&json::pattern(&p)).as_bytes())?,
                Format::Dot => out.write_all(dot::pattern(&p).as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Tensor {
            weight,
            k,
            dual,
            format,
        } => {
            let d = if dual {
                tensor_with_dual(&weight, k)
            } else {
                tensor_with_fundamental(&weight, k)
            }
            .expect("k is range-checked by the parser");
            match format {
                Format::Text => write!(out, "{d}")?,
                Format::Json => out.write_all(json::render(&json::decomposition(&d)).as_bytes())?,
                Format::Dot => return usage(err, "tensor has no DOT form"),
            }
            Ok(EXIT_OK)
        }
        Command::Order { source, target } => match hom_order(&source, &target) {
            Ok(n) => {
                writeln!(out, "{n}")?;
                Ok(EXIT_OK)
            }
            Err(e) => {
                writeln!(err, "error: {e}")?;
                Ok(EXIT_FAILURE)
            }
        },
        Command::LiftStatus { source, target } => {
            let ch = source.inf_char();
            let pattern = pattern_of(&ch);
            let Some(arrow) = pattern.find_arrow(&source, &target) else {
                writeln!(err, "error: no arrow {source:#} -> {target:#} in the pattern of {ch:#}")?;
                return Ok(EXIT_FAILURE);
            };
            let status = lift_status(arrow, &ch).expect("arrow was taken from the pattern");
            writeln!(out, "{arrow}")?;
            writeln!(out, "{status}")?;
            Ok(EXIT_OK)
        }
        Command::Translate { what } => translate(what, out, err),
        Command::VerifyPaper { format } => {
            let v = verify_paper();
            match format {
                Format::Text => write!(out, "{v}")?,
                Format::Json => out.write_all(json::render(&json::verification(&v)).as_bytes())?,
                Format::Dot => return usage(err, "verify-paper has no DOT form"),
            }
            Ok(if v.all_passed() { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Export {
            character,
            format,
            output,
        } => {
            let p = pattern_of(&character);
            let text = match format {
                ExportFormat::Dot => dot::pattern(&p),
                ExportFormat::Json => json::render(&json::pattern(&p)),
            };
            match output {
                Some(path) => std::fs::write(path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
    }
}

fn classify(w: &Weight6, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    match format {
        Format::Json => {
            out.write_all(json::render(&json::classify(w)).as_bytes())?;
            return Ok(EXIT_OK);
        }
        Format::Dot => return usage(err, "classify has no DOT form"),
        Format::Text => {}
    }
    match w.to_p_dominant() {
        Ok(p) => {
            let ch = p.inf_char();
            writeln!(out, "weight {p:#}")?;
            writeln!(out, "dynkin {}", alpha_to_dynkin(*w))?;
            writeln!(out, "p-dominant yes")?;
            writeln!(out, "character {ch}")?;
            writeln!(out, "singularity {}", ch.singularity())?;
            writeln!(out, "phi {}", p.phi())?;
        }
        Err(_) => {
            writeln!(out, "weight {w}")?;
            writeln!(out, "dynkin {}", alpha_to_dynkin(*w))?;
            writeln!(out, "p-dominant no")?;
        }
    }
    Ok(EXIT_OK)
}

fn pattern_text(p: &gr33_core::Pattern) -> String {
    let mut s = format!(
        "character {:#} {} nodes={} standard={} nonstandard={}\n",
        p.character,
        p.character.singularity(),
        p.nodes.len(),
        p.standard_count(),
        p.nonstandard_count()
    );
    for a in &p.arrows {
        let lift = lift_status(a, &p.character).expect("pattern arrows belong to their pattern");
        s.push_str(&format!("{a} lift={}\n", lift.verdict()));
    }
    s
}

fn translate(what: Translate, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let (certificate, format) = match what {
        Translate::Node { weight, target } => {
            return match translate_node(&weight, &target) {
                Ok(w) => {
                    writeln!(out, "{w:#}")?;
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    Ok(EXIT_FAILURE)
                }
            };
        }
        Translate::Equisingular {
            k,
            f,
            e,
            f_prime,
            e_prime,
            format,
        } => (check_equisingular(&f, &e, &f_prime, &e_prime, k.k), format),
        Translate::OneWay {
            k,
            e,
            f,
            e1,
            e2,
            f1,
            f2,
            format,
        } => (check_oneway(&e, &f, &e1, &e2, &f1, &f2, k.k), format),
    };
    let certificate = certificate.expect("k is range-checked by the parser");
    match format {
        Format::Text => {
            write!(out, "{certificate}")?;
            for list in certificate.factor_lists() {
                writeln!(out, "{list}")?;
            }
        }
        Format::Json => out.write_all(json::render(&json::certificate(&certificate)).as_bytes())?,
        Format::Dot => return usage(err, "translate has no DOT form"),
    }
    Ok(if certificate.is_valid() { EXIT_OK } else { EXIT_FAILURE })
}
