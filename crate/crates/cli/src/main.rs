//! `singbraid`: command-line front end for the singular braid toolkit.
//!
//! Exit codes: 0 on success or a passing check, 1 on a failing check or a
//! computation error, 2 on a usage error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use singbraid::purebraid::{center_presentation, PnForm};
use singbraid::singquandle::enumerate_singquandles;
use singbraid::*;

#[derive(Parser)]
#[command(
    name = "singbraid",
    version,
    about = "Singular braids: word problem, pure subgroup, representations and invariants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// A braid word such as "s1 S2 t1 T2" (s/S = σ^±1, t/T = τ^±1).
#[derive(Args)]
struct BraidArgs {
    /// Number of strands.
    #[arg(long)]
    strands: usize,
    /// The braid word.
    #[arg(long)]
    braid: String,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a braid word and report its basic data.
    Parse {
        #[arg(long)]
        strands: usize,
        word: String,
    },
    /// Permutations π (σ, τ ↦ transposition) and θ (σ ↦ e, τ ↦ transposition).
    Perm {
        #[arg(long)]
        strands: usize,
        word: String,
    },
    /// Decide equality in SB_n; prints "equal" (exit 0) or "different" (exit 1).
    Equal {
        #[arg(long)]
        strands: usize,
        left: String,
        right: String,
    },
    /// Rewrite a pure singular braid in the generators a_ij, b_ij.
    Rewrite {
        #[arg(long)]
        strands: usize,
        word: String,
    },
    /// Combed normal form u_n … u_2 of a classical pure braid.
    Comb {
        #[arg(long)]
        strands: usize,
        word: String,
    },
    /// Emit a presentation.
    Present {
        #[arg(long, value_enum, default_value_t = Group::Sp)]
        group: Group,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite and print one line per instance.
    Verify {
        /// sbn-relations, sp-presentation, ct-table, center-lemmas, camomile,
        /// rep-respect, sq-axioms or rs-roundtrip.
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        /// Strand count, or the largest model order for sq-axioms.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Representations Φ1, Φ2, Φ3, Φ4,n by free group endomorphisms.
    Rep {
        #[command(subcommand)]
        command: RepCommand,
    },
    /// Singquandles: presentations, finite models and colorings.
    Sq {
        #[command(subcommand)]
        command: SqCommand,
    },
    /// Link invariants from braid closures.
    Invariant {
        #[command(subcommand)]
        command: InvariantCommand,
    },
}

#[derive(Subcommand)]
enum RepCommand {
    /// Print the images of x_1..x_n.
    Apply {
        /// phi1, phi2, phi3 or phi4:N.
        #[arg(long, value_parser = parse_rep)]
        rep: RepId,
        #[command(flatten)]
        braid: BraidArgs,
    },
    /// Check the defining relations of SB_n; exit 1 if any fails.
    Check {
        #[arg(long, value_parser = parse_rep)]
        rep: RepId,
        #[arg(long)]
        strands: usize,
    },
}

#[derive(Subcommand)]
enum SqCommand {
    /// Fundamental singquandle presentation of the closure.
    Present {
        #[command(flatten)]
        braid: BraidArgs,
    },
    /// Enumerate all singquandles of one order and write them as JSON.
    Census {
        #[arg(long)]
        order: usize,
        /// Keep one model per isomorphism class.
        #[arg(long)]
        up_to_iso: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count colorings of the closure by every model in a JSON file.
    Colorings {
        #[command(flatten)]
        braid: BraidArgs,
        /// A single model or a list of models.
        #[arg(long)]
        model: PathBuf,
    },
}

#[derive(Subcommand)]
enum InvariantCommand {
    /// The group G_Ψ(β) and invariants computed from it.
    Group {
        #[arg(long, value_parser = parse_rep)]
        rep: RepId,
        #[command(flatten)]
        braid: BraidArgs,
        #[arg(long)]
        simplify: bool,
        #[arg(long)]
        abelianize: bool,
        /// z<k>, d<k>, s<n> or a4.
        #[arg(long)]
        homs_into: Vec<String>,
        /// Enumerate cosets of the trivial subgroup with this cap.
        #[arg(long)]
        todd_coxeter: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Group {
    /// Singular pure braid group SP_n.
    Sp,
    /// Pure braid group P_n.
    Pn,
    /// P_n in conjugation form.
    PnConj,
    /// SP_n with the full twist as a generator.
    Center,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Gap,
}

fn parse_rep(text: &str) -> std::result::Result<RepId, String> {
    text.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(text: &str) -> std::result::Result<Suite, String> {
    text.parse().map_err(|e: Error| e.to_string())
}

fn print_presentation(p: &GroupPresentation, format: Format) {
    match format {
        Format::Text => println!("{p}"),
        Format::Json => println!("{}", p.to_json()),
        Format::Gap => print!("{}", p.to_gap()),
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Parse { strands, word } => {
            let w = parse_braid(&word, strands)?;
            println!(
                "word: {}",
                if w.is_empty() {
                    "e".to_string()
                } else {
                    w.to_string()
                }
            );
            println!("strands: {}", w.strands());
            println!("length: {}", w.len());
            println!("singular letters: {}", w.tau_count());
            println!("tau-positive: {}", w.is_tau_positive());
            println!("pure: {}", w.pi_image().is_identity());
        }
        Command::Perm { strands, word } => {
            let w = parse_braid(&word, strands)?;
            println!("pi: {}", w.pi_image());
            println!("theta: {}", w.theta_image());
        }
        Command::Equal {
            strands,
            left,
            right,
        } => {
            let same = sb_equal(
                &parse_braid(&left, strands)?,
                &parse_braid(&right, strands)?,
            )?;
            println!("{}", if same { "equal" } else { "different" });
            return Ok(same);
        }
        Command::Rewrite { strands, word } => {
            let p = rs_rewrite(&parse_braid(&word, strands)?)?;
            println!(
                "{}",
                if p.is_empty() {
                    "e".to_string()
                } else {
                    p.to_string()
                }
            );
        }
        Command::Comb { strands, word } => {
            let parts = comb(&parse_braid(&word, strands)?)?;
            for (k, u) in parts.iter().enumerate() {
                let text = if u.is_empty() {
                    "e".to_string()
                } else {
                    u.to_string()
                };
                println!("u{}: {text}", strands - k);
            }
        }
        Command::Present { group, n, format } => {
            let p = match group {
                Group::Sp => sp_presentation(n)?,
                Group::Pn => pn_presentation(n, PnForm::Standard)?,
                Group::PnConj => pn_presentation(n, PnForm::Conjugation)?,
                Group::Center => center_presentation(n)?,
            };
            print_presentation(&p, format);
        }
        Command::Verify { suite, n, seed } => {
            let results = run_suite(suite, n, seed)?;
            let failed = results.iter().filter(|r| !r.passed).count();
            for r in &results {
                let status = if r.passed { "PASS" } else { "FAIL" };
                match &r.detail {
                    Some(d) => println!("{status} {} ({d})", r.name),
                    None => println!("{status} {}", r.name),
                }
            }
            println!(
                "{suite}: {} passed, {failed} failed",
                results.len() - failed
            );
            return Ok(failed == 0);
        }
        Command::Rep { command } => match command {
            RepCommand::Apply { rep, braid } => {
                let w = parse_braid(&braid.braid, braid.strands)?;
                let img = phi_word(rep, &w)?;
                for (k, x) in img.images().iter().enumerate() {
                    println!("x{} -> {x}", k + 1);
                }
            }
            RepCommand::Check { rep, strands } => {
                let failing = Representation::new(rep).failing_relations(strands);
                for name in &failing {
                    println!("FAIL {name}");
                }
                println!(
                    "{rep} at {strands} strands: {} relations fail",
                    failing.len()
                );
                return Ok(failing.is_empty());
            }
        },
        Command::Sq { command } => match command {
            SqCommand::Present { braid } => {
                println!(
                    "{}",
                    fundamental_singquandle(&parse_braid(&braid.braid, braid.strands)?)?
                );
            }
            SqCommand::Census {
                order,
                up_to_iso,
                out,
            } => {
                let models = enumerate_singquandles(order, up_to_iso)?;
                let text = FiniteSingquandle::list_to_json(&models);
                match out {
                    Some(path) => {
                        fs::write(&path, text)
                            .map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
                        println!(
                            "{} models of order {order} written to {}",
                            models.len(),
                            path.display()
                        );
                    }
                    None => println!("{text}"),
                }
            }
            SqCommand::Colorings { braid, model } => {
                let text = fs::read_to_string(&model)
                    .map_err(|e| Error::Invalid(format!("{}: {e}", model.display())))?;
                let models = match FiniteSingquandle::list_from_json(&text) {
                    Ok(list) => list,
                    Err(_) => vec![FiniteSingquandle::from_json(&text)?],
                };
                let p = fundamental_singquandle(&parse_braid(&braid.braid, braid.strands)?)?;
                for (k, m) in models.iter().enumerate() {
                    println!("model {k}: {} colorings", count_sq_colorings(&p, m)?);
                }
            }
        },
        Command::Invariant { command } => match command {
            InvariantCommand::Group {
                rep,
                braid,
                simplify,
                abelianize,
                homs_into,
                todd_coxeter: cap,
                format,
            } => {
                let w = parse_braid(&braid.braid, braid.strands)?;
                let mut p = group_of_braid(rep, &w)?;
                if simplify {
                    p = tietze_simplify(&p, 10_000);
                }
                let ab = abelianize.then(|| abelianization(&p));
                let mut homs = Vec::new();
                for name in &homs_into {
                    let g = FiniteGroupModel::by_name(name)?;
                    homs.push((g.name().to_string(), count_homs(&p, &g)?));
                }
                let order = cap.map(|c| todd_coxeter(&p, &[], c));
                if format == Format::Text {
                    println!("{p}");
                    if let Some(ab) = &ab {
                        println!("abelianization: {ab}");
                    }
                    for (name, count) in &homs {
                        println!("homs into {name}: {count}");
                    }
                    match order {
                        Some(CosetIndex::Index(k)) => println!("order: {k}"),
                        Some(CosetIndex::Unknown) => println!("order: unknown (coset cap reached)"),
                        None => {}
                    }
                } else if format == Format::Gap {
                    print!("{}", p.to_gap());
                } else {
                    let mut doc = json!({ "presentation": serde_json::from_str::<serde_json::Value>(&p.to_json()).expect("valid json") });
                    if let Some(ab) = &ab {
                        let torsion: Vec<String> =
                            ab.torsion.iter().map(|d| d.to_string()).collect();
                        doc["abelianization"] =
                            json!({ "free_rank": ab.free_rank, "torsion": torsion });
                    }
                    if !homs.is_empty() {
                        doc["homs"] = homs
                            .iter()
                            .map(|(n, c)| (n.clone(), json!(c)))
                            .collect::<serde_json::Map<_, _>>()
                            .into();
                    }
                    match order {
                        Some(CosetIndex::Index(k)) => doc["order"] = json!(k),
                        Some(CosetIndex::Unknown) => doc["order"] = json!(null),
                        None => {}
                    }
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&doc).expect("plain data serializes")
                    );
                }
            }
        },
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
