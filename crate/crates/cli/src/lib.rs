//! Command dispatch for the `raa` binary.
//!
//! Exit codes: 0 = accept / empty / success, 1 = reject / nonempty,
//! 2 = usage or validation error. All output is deterministic.

use clap::{Parser, Subcommand};
use raa_core::core::{
    enumerate_words, export_tree_dot, parse_machine, serialize_machine, validate, EmptinessVerdict,
    MachineDescription, Verdict, Word,
};
use raa_core::{alt, pafa, qfa, tmc};
use std::io::Write;
use std::path::{Path, PathBuf};

pub const EXIT_ACCEPT: i32 = 0;
pub const EXIT_REJECT: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser)]
#[command(
    name = "raa",
    about = "Simulators and deciders for realtime alternating automata",
    version,
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a machine on a word and print ACCEPT or REJECT.
    Run {
        machine: PathBuf,
        /// Input word; pass "" for the empty word.
        word: String,
        /// Write the evaluated computation tree as Graphviz DOT.
        #[arg(long, value_name = "FILE")]
        tree: Option<PathBuf>,
        /// For qfa machines, use universal (probability-1) acceptance
        /// instead of nondeterministic acceptance.
        #[arg(long)]
        uqfa: bool,
    },
    /// Print every accepted word of length at most the bound.
    Enumerate {
        machine: PathBuf,
        #[arg(long, value_name = "L")]
        max_len: usize,
        #[arg(long)]
        uqfa: bool,
    },
    /// Decide emptiness (qfa machines only), or sweep words up to a
    /// bound with --bounded.
    Emptiness {
        machine: PathBuf,
        /// Enumeration sweep bound; the EMPTY direction is then not
        /// conclusive.
        #[arg(long, value_name = "L")]
        bounded: Option<usize>,
        #[arg(long)]
        uqfa: bool,
    },
    /// Compile a Turing machine into a unary alternating one-counter
    /// automaton.
    CompileTm {
        tm: PathBuf,
        #[arg(short, value_name = "FILE")]
        out: PathBuf,
    },
    /// Write one of the built-in machines.
    Build {
        #[arg(value_parser = ["upower", "twin", "usquare-pa1ca", "usquare-aqfa"])]
        name: String,
        #[arg(short, value_name = "FILE")]
        out: PathBuf,
    },
    /// Validate a machine file; exit 0 iff there are no violations.
    Check { machine: PathBuf },
}

/// Parses `argv` and executes one subcommand, writing to the given
/// streams. Returns the process exit code.
pub fn dispatch(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/usage text; --help and
            // --version exit successfully.
            return if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_ERROR
            } else {
                let _ = write!(out, "{e}");
                EXIT_ACCEPT
            };
        }
    };
    match run(cli, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn load_machine(path: &Path) -> Result<MachineDescription, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_machine(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn accepts(m: &MachineDescription, w: &Word, uqfa: bool) -> Result<Verdict, String> {
    let verdict = match (m, uqfa) {
        (MachineDescription::Qfa(q), true) => qfa::uqfa_accepts(q, w),
        _ => m.accepts(w),
    };
    verdict.map_err(|e| e.to_string())
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<i32, String> {
    let mut emit = |line: String| writeln!(out, "{line}").map_err(|e| e.to_string());
    match cli.command {
        Command::Run {
            machine,
            word,
            tree,
            uqfa,
        } => {
            let m = load_machine(&machine)?;
            let w = Word::from_str(&word);
            let verdict = accepts(&m, &w, uqfa)?;
            if let Some(path) = tree {
                let dot = render_tree(&m, &w)?;
                std::fs::write(&path, dot)
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            emit(match verdict {
                Verdict::Accept => "ACCEPT".into(),
                Verdict::Reject => "REJECT".into(),
            })?;
            Ok(if verdict.accepted() {
                EXIT_ACCEPT
            } else {
                EXIT_REJECT
            })
        }
        Command::Enumerate {
            machine,
            max_len,
            uqfa,
        } => {
            let m = load_machine(&machine)?;
            for w in enumerate_words(m.alphabet(), max_len) {
                if accepts(&m, &w, uqfa)?.accepted() {
                    emit(w.to_string())?;
                }
            }
            Ok(EXIT_ACCEPT)
        }
        Command::Emptiness {
            machine,
            bounded,
            uqfa,
        } => {
            let m = load_machine(&machine)?;
            match (&m, bounded) {
                (MachineDescription::Qfa(q), None) if !uqfa => {
                    match qfa::nqfa_emptiness(q).map_err(|e| e.to_string())? {
                        EmptinessVerdict::Empty => {
                            emit("EMPTY".into())?;
                            Ok(EXIT_ACCEPT)
                        }
                        EmptinessVerdict::Nonempty { witness } => {
                            emit(format!("NONEMPTY \"{witness}\""))?;
                            Ok(EXIT_REJECT)
                        }
                    }
                }
                (_, None) => Err(format!(
                    "emptiness is undecidable for kind {:?}{}; rerun with --bounded L for a non-conclusive sweep",
                    m.kind(),
                    if uqfa { " under universal acceptance" } else { "" },
                )),
                (_, Some(bound)) => {
                    for w in enumerate_words(m.alphabet(), bound) {
                        if accepts(&m, &w, uqfa)?.accepted() {
                            emit(format!("NONEMPTY \"{w}\""))?;
                            return Ok(EXIT_REJECT);
                        }
                    }
                    emit(format!("NO WITNESS <= {bound}"))?;
                    Ok(EXIT_ACCEPT)
                }
            }
        }
        Command::CompileTm { tm, out: out_path } => {
            let text = std::fs::read_to_string(&tm)
                .map_err(|e| format!("cannot read {}: {e}", tm.display()))?;
            let tm = tmc::parse_tm(&text).map_err(|e| e.to_string())?;
            let compiled = tmc::compile_tm_to_a1ca(&tm).map_err(|e| e.to_string())?;
            let serialized = serialize_machine(&MachineDescription::A1ca(compiled));
            std::fs::write(&out_path, serialized)
                .map_err(|e| format!("cannot write {}: {e}", out_path.display()))?;
            Ok(EXIT_ACCEPT)
        }
        Command::Build {
            name,
            out: out_path,
        } => {
            let m = match name.as_str() {
                "upower" => MachineDescription::Pafa(pafa::build_upower()),
                "twin" => MachineDescription::Pafa(pafa::build_twin()),
                "usquare-pa1ca" => MachineDescription::Pa1ca(pafa::build_usquare_pa1ca()),
                "usquare-aqfa" => MachineDescription::Aqfa(qfa::build_usquare_aqfa()),
                other => return Err(format!("unknown built-in {other:?}")),
            };
            std::fs::write(&out_path, serialize_machine(&m))
                .map_err(|e| format!("cannot write {}: {e}", out_path.display()))?;
            Ok(EXIT_ACCEPT)
        }
        Command::Check { machine } => {
            let text = std::fs::read_to_string(&machine)
                .map_err(|e| format!("cannot read {}: {e}", machine.display()))?;
            // Re-validate explicitly so every violation is listed.
            match parse_machine(&text) {
                Ok(m) => {
                    debug_assert!(validate(&m).is_empty());
                    emit("OK".into())?;
                    Ok(EXIT_ACCEPT)
                }
                Err(e) => Err(e.to_string()),
            }
        }
    }
}

fn render_tree(m: &MachineDescription, w: &Word) -> Result<String, String> {
    let tree = match m {
        MachineDescription::Afa(m) => alt::afa_tree(m, w),
        MachineDescription::A1ca(m) => alt::a1ca_tree(m, w),
        MachineDescription::Aqfa(m) => qfa::aqfa_tree(m, w),
        MachineDescription::Pafa(_) | MachineDescription::Pa1ca(_) => {
            return Err("tree export is available for afa, a1ca, and aqfa machines".into())
        }
        MachineDescription::Qfa(_) => {
            return Err("tree export does not apply to density-operator machines".into())
        }
    };
    Ok(export_tree_dot(&tree.map_err(|e| e.to_string())?))
}
