//! Command-line front end: `fib <command> ...`. Reports are JSON on stdout
//! unless noted; errors go to stderr with a nonzero exit code.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use fib_core::curvature::{self, SphericalComplex};
use fib_core::ledger::{self, LedgerReport};
use fib_core::oracle::{self, Enumeration, Strategy, DEFAULT_MAX_COSETS};
use fib_core::presentations::{self, Presentation, TietzeScript, Verdict};
use fib_core::regions;
use fib_core::stargraph;

#[derive(Parser)]
#[command(name = "fib", about = "Exact checks for generalised Fibonacci groups and P_n")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print F(r,n) in the presentation text format.
    Present {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        n: i64,
    },
    /// Replay a Tietze script against its embedded start and target.
    Tietze {
        #[arg(long)]
        script: PathBuf,
        /// Start presentation in text format, overriding the embedded one.
        #[arg(long)]
        start: Option<PathBuf>,
        /// Target presentation in text format, overriding the embedded one.
        #[arg(long)]
        target: Option<PathBuf>,
        /// Include every intermediate presentation in the report.
        #[arg(long)]
        trace: bool,
    },
    /// Order of F(r,n) by coset enumeration over the trivial subgroup.
    Order {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        n: i64,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
        /// Use HLT instead of Felsch.
        #[arg(long)]
        hlt: bool,
    },
    /// Abelian invariants of F(r,n).
    Ab {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        n: i64,
    },
    /// Enumerate every finite case of the order classification.
    VerifyThm1 {
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
        /// Skip cases whose expected order exceeds this.
        #[arg(long, default_value_t = 10_000)]
        size_cap: u64,
    },
    /// Admissible vertex labels of a given degree, one per line, then a
    /// JSON summary.
    StarLabels {
        #[arg(long)]
        degree: usize,
        #[arg(long = "mod", default_value_t = 5)]
        modulus: i64,
    },
    /// Curvature of a region with the given vertex degrees.
    Curvature {
        #[arg(required = true)]
        degrees: Vec<u32>,
        /// Accept degrees below 3.
        #[arg(long)]
        raw: bool,
    },
    /// Total curvature and Euler characteristic of a spherical complex.
    Euler {
        #[arg(long)]
        complex: PathBuf,
    },
    /// Chord-configuration classification.
    Regions {
        #[command(subcommand)]
        cmd: RegionsCmd,
    },
    /// Inequality ledgers.
    Ledger {
        #[command(subcommand)]
        cmd: LedgerCmd,
    },
}

#[derive(Subcommand)]
enum RegionsCmd {
    Classify {
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 7)]
        nmin: i64,
        /// Include every canonical labeling of each survivor.
        #[arg(long)]
        labelings: bool,
    },
}

#[derive(Subcommand)]
enum LedgerCmd {
    /// Check one ledger file. Exits nonzero on a refuted or malformed entry.
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check every `.ledger` file in a directory and write the findings
    /// document.
    Findings {
        dir: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

/// Writes pretty JSON to stdout, ignoring a closed pipe.
fn print_json(v: &impl serde::Serialize) {
    let _ = writeln!(std::io::stdout().lock(), "{}", serde_json::to_string_pretty(v).expect("reports serialize"));
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.cmd {
        Cmd::Present { r, n } => {
            let p = presentations::build_fibonacci(r, n).map_err(|e| e.to_string())?;
            print!("{}", p.to_text());
            Ok(true)
        }
        Cmd::Tietze { script, start, target, trace } => {
            let s = TietzeScript::from_json(&read(&script)?).map_err(|e| format!("{}: {e}", script.display()))?;
            let load = |path: Option<PathBuf>, embedded: &Option<Presentation>, what: &str| match path {
                Some(p) => Presentation::parse_text(&read(&p)?).map_err(|e| format!("{}: {e}", p.display())),
                None => embedded.clone().ok_or_else(|| format!("script has no embedded {what}; pass --{what}")),
            };
            let start = load(start, &s.start, "start")?;
            let target = load(target, &s.target, "target")?;
            let report = presentations::verify_tietze_script(&start, &s, &target);
            let valid = report.verdict == Verdict::Valid;
            let mut out = json!({ "name": s.name, "verdict": report.verdict, "steps": s.steps.len() });
            if trace {
                out["trace"] = json!(report.trace.iter().map(|p| p.to_string()).collect::<Vec<_>>());
            }
            print_json(&out);
            Ok(valid)
        }
        Cmd::Order { r, n, max_cosets, hlt } => {
            let p = presentations::build_fibonacci(r, n).map_err(|e| e.to_string())?;
            let strategy = if hlt { Strategy::Hlt } else { Strategy::Felsch };
            let t = Instant::now();
            let rep = oracle::coset_enumerate_with(&p, max_cosets, strategy);
            let order = match rep.result {
                Enumeration::Finite(o) => Some(o),
                Enumeration::Overflow => None,
            };
            print_json(&json!({
                "r": r, "n": n, "order": order, "overflow": order.is_none(),
                "expected": oracle::classified_order(r, n),
                "cosets_defined": rep.cosets_defined, "strategy": rep.strategy, "ms": t.elapsed().as_millis(),
            }));
            Ok(order.is_some())
        }
        Cmd::Ab { r, n } => {
            let p = presentations::build_fibonacci(r, n).map_err(|e| e.to_string())?;
            let inv: Vec<String> = oracle::abelianization(&p).iter().map(|x| x.to_string()).collect();
            let order = oracle::abelianization_order(&p).map(|x| x.to_string());
            print_json(&json!({ "r": r, "n": n, "invariants": inv, "order": order }));
            Ok(true)
        }
        Cmd::VerifyThm1 { max_cosets, size_cap } => {
            let report = oracle::verify_theorem_1_1(&oracle::acceptance_cases(), max_cosets, size_cap);
            print_json(&report);
            Ok(report.all_passed())
        }
        Cmd::StarLabels { degree, modulus } => {
            let labels = stargraph::enumerate_vertex_labels_mod(degree, modulus);
            let text: Vec<String> = labels.iter().map(|l| l.ascii()).collect();
            for l in &text {
                println!("{l}");
            }
            println!("{}", json!({ "degree": degree, "count": text.len(), "labels": text }));
            Ok(true)
        }
        Cmd::Curvature { degrees, raw } => {
            let c = if raw { curvature::curvature_raw(&degrees) } else { curvature::curvature(&degrees) };
            println!("{}", c.map_err(|e| e.to_string())?);
            Ok(true)
        }
        Cmd::Euler { complex } => {
            let k = SphericalComplex::from_json(&read(&complex)?).map_err(|e| format!("{}: {e}", complex.display()))?;
            let total = curvature::total_curvature(&k).map_err(|e| e.to_string())?;
            let is_4pi = total == curvature::Angle::pi().times(4);
            print_json(&json!({
                "vertices": k.vertex_count(), "edges": k.edge_count(), "faces": k.faces.len(),
                "euler_characteristic": k.euler_characteristic(), "total_curvature": total.to_string(),
                "equals_4pi": is_4pi,
            }));
            Ok(is_4pi)
        }
        Cmd::Regions { cmd: RegionsCmd::Classify { degree, nmin, labelings } } => {
            let r = regions::classify_regions(degree, nmin).map_err(|e| e.to_string())?;
            let survivors: Vec<_> = r
                .survivors
                .iter()
                .map(|s| {
                    let mut v = json!({
                        "chords": s.config.to_string(), "lengths": s.lengths, "n_condition": s.n,
                        "labeling_count": s.labelings.len(),
                    });
                    if labelings {
                        v["labelings"] = json!(s
                            .labelings
                            .iter()
                            .map(|l| l.labels.iter().map(|c| c.ascii()).collect::<Vec<_>>().join(" "))
                            .collect::<Vec<_>>());
                    }
                    v
                })
                .collect();
            print_json(&json!({
                "degree": degree, "nmin": nmin, "configs": r.configs, "survivors": survivors,
                "lec_killed": r.lec_killed, "lac_killed": r.lac_killed,
            }));
            Ok(true)
        }
        Cmd::Ledger { cmd: LedgerCmd::Check { file, json } } => {
            let report = ledger::check_file(&file).map_err(|e| e.to_string())?;
            if json {
                print_json(&report);
            } else {
                for e in &report.entries {
                    let value = e.value.as_ref().map(|v| v.to_string()).unwrap_or_else(|| "-".into());
                    println!("{:?}\t{}\t{value}\t{}", e.verdict, e.id, e.claim);
                    for f in &e.findings {
                        println!("\tfinding: {f}");
                    }
                }
                println!("verified {} refuted {} malformed {}", report.verified, report.refuted, report.malformed);
            }
            Ok(report.ok())
        }
        Cmd::Ledger { cmd: LedgerCmd::Findings { dir, out } } => {
            let mut files: Vec<PathBuf> = fs::read_dir(&dir)
                .map_err(|e| format!("{}: {e}", dir.display()))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "ledger"))
                .collect();
            files.sort();
            let mut reports: Vec<(String, LedgerReport)> = Vec::new();
            for f in &files {
                let name = f.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
                reports.push((name, ledger::check_file(f).map_err(|e| e.to_string())?));
            }
            let refs: Vec<(&str, &LedgerReport)> = reports.iter().map(|(n, r)| (n.as_str(), r)).collect();
            let md = ledger::findings_markdown(&refs);
            match out {
                Some(p) => fs::write(&p, md).map_err(|e| format!("{}: {e}", p.display()))?,
                None => print!("{md}"),
            }
            Ok(reports.iter().all(|(_, r)| r.ok()))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
