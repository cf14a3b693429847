//! Command-line front end: generate graphs, run closures and searches,
//! compute exact ranks, and drive the verification pipeline.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

use circforce::circulant::CirculantSpec;
use circforce::error::Error;
use circforce::families::predict;
use circforce::forcing::{
    closure_with_chronology, witness_set, zf_exact, zf_lower_bounds, SearchOptions,
    WitnessConstruction, DEFAULT_CEILING,
};
use circforce::graph::Graph;
use circforce::linalg::{
    hankel, parse_matrix, witness_c913, witness_k4, witness_k6, ParsedMatrix,
};
use circforce::verify::{sweep, verify, SweepOptions, VerifyOptions};
use circforce::VertexSet;

#[derive(Parser)]
#[command(
    name = "circforce",
    version,
    about = "Exact zero forcing numbers and maximum-nullity certificates for circulant graphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit a graph. Targets: "C12(1,6)", "K3 box C7", "K3 torus C6",
    /// "C4 torus C5".
    Gen {
        target: String,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: GraphFormat,
    },
    /// Run the filling rule to its fixed point from the given vertices.
    Closure {
        target: String,
        /// Comma-separated initially filled vertices, e.g. 0,1,6.
        #[arg(long)]
        filled: String,
    },
    /// Exact zero forcing number by search.
    Zf {
        target: String,
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        ceiling: usize,
        /// Enable fort pruning (same answers, sometimes faster).
        #[arg(long)]
        aggressive: bool,
    },
    /// Theorem-based lower bound from regularity and girth.
    Bounds { target: String },
    /// Exact rank and nullity of a named witness matrix or a matrix file.
    Rank {
        /// Path to a matrix in the textual export grammar.
        target: Option<PathBuf>,
        /// One of: c9, k4:<n>, k6:<n>, hankel:<n>.
        #[arg(long)]
        witness: Option<String>,
    },
    /// Build a constructive forcing set and verify it by closure.
    /// Constructions: two-columns:<n>:<m>, three-columns:<n>,
    /// neighborhood:<n>, cycle-columns:<n>:<m>.
    Witness { construction: String },
    /// List every closed-form claim matching a spec.
    Predict {
        spec: String,
        #[arg(long)]
        table: bool,
    },
    /// Check all claims for a spec against search and witness evidence.
    Verify {
        spec: String,
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        ceiling: usize,
        #[arg(long)]
        budget_seconds: Option<u64>,
        #[arg(long)]
        table: bool,
    },
    /// Exhaustive non-contradiction sweep over connected circulants.
    Sweep {
        #[arg(long, default_value_t = 16)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        ceiling: usize,
        #[arg(long)]
        budget_seconds: Option<u64>,
        #[arg(long)]
        table: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Parse { .. } | Error::InvalidSpec(_) => 2,
                Error::CeilingExceeded { .. } => 3,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, Error> {
    match cmd {
        Cmd::Gen { target, format } => {
            let g = parse_target(&target)?;
            match format {
                GraphFormat::Edgelist => print!("{}", g.to_edge_list()),
                GraphFormat::Dot => print!("{}", g.to_dot()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Closure { target, filled } => {
            let g = parse_target(&target)?;
            let f = parse_filled(&filled, g.order())?;
            let (end, chronology) = closure_with_chronology(&g, &f)?;
            for (v, w) in &chronology {
                println!("{v} -> {w}");
            }
            println!("final = {end}");
            println!("forcing = {}", end.is_full());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Zf {
            target,
            ceiling,
            aggressive,
        } => {
            let g = parse_target(&target)?;
            // vertex-transitive pruning is only sound for circulant targets
            let fix_first = CirculantSpec::parse(&target).is_ok();
            let outcome = zf_exact(
                &g,
                &SearchOptions {
                    ceiling,
                    fix_first_vertex: fix_first,
                    aggressive,
                    hints: None,
                },
            )?;
            println!("Z = {}", outcome.z);
            println!("witness = {}", outcome.witness);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Bounds { target } => {
            let g = parse_target(&target)?;
            println!("lower bound = {}", zf_lower_bounds(&g));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Rank { target, witness } => {
            let (rank, nullity) = match (target, witness) {
                (None, Some(name)) => rank_of_named(&name)?,
                (Some(path), None) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| {
                        Error::Unsupported(format!("cannot read {}: {e}", path.display()))
                    })?;
                    match parse_matrix(&text)? {
                        ParsedMatrix::Rational(m) => (m.rank(), m.nullity()),
                        ParsedMatrix::Quad(m) => (m.rank(), m.nullity()),
                    }
                }
                _ => {
                    return Err(Error::Unsupported(
                        "rank needs exactly one of a file path or --witness".into(),
                    ))
                }
            };
            println!("rank = {rank}, nullity = {nullity}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Witness { construction } => {
            let c = parse_construction(&construction)?;
            let (g, f) = witness_set(&c)?;
            println!("graph order = {}", g.order());
            println!("size = {}", f.card());
            println!("set = {f}");
            println!("forcing = true");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Predict { spec, table } => {
            let spec = CirculantSpec::parse(&spec)?;
            let preds = predict(&spec);
            if table {
                for p in &preds {
                    let note = p.note.as_deref().unwrap_or("");
                    println!(
                        "{:<22} {:<16} mult {:<3} copies {:<3} {}",
                        p.family.to_string(),
                        p.z.to_string(),
                        p.multiplier,
                        p.copies,
                        note
                    );
                }
            } else {
                println!("{}", render_json(&preds));
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            spec,
            ceiling,
            budget_seconds,
            table,
        } => {
            let spec = CirculantSpec::parse(&spec)?;
            let opts = VerifyOptions {
                ceiling,
                budget: budget_seconds.map(Duration::from_secs),
            };
            let started = Instant::now();
            let report = verify(&spec, &opts);
            eprintln!("verify took {:?}", started.elapsed());
            if table {
                print!("{}", report.to_table());
            } else {
                println!("{}", render_json(&report));
            }
            Ok(if report.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(4)
            })
        }
        Cmd::Sweep {
            max_n,
            ceiling,
            budget_seconds,
            table,
        } => {
            let opts = SweepOptions {
                max_n,
                ceiling,
                budget: budget_seconds.map(Duration::from_secs),
            };
            let started = Instant::now();
            let report = sweep(&opts);
            eprintln!("sweep took {:?}", started.elapsed());
            if table {
                print!("{}", report.to_table());
            } else {
                println!("{}", render_json(&report));
            }
            Ok(if report.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(4)
            })
        }
    }
}

fn render_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

/// A target is either a circulant spec or `<atom> box|torus <atom>` where
/// an atom is `K<n>`, `C<n>`, or a full circulant spec.
fn parse_target(text: &str) -> Result<Graph, Error> {
    let trimmed = text.trim();
    let words: Vec<&str> = trimmed.split_whitespace().collect();
    match words.as_slice() {
        [one] => parse_atom(one),
        [left, op, right] => {
            let l = parse_atom(left)?;
            let r_spec = *right;
            match *op {
                "box" => Ok(l.cartesian_product(&parse_atom(r_spec)?)),
                "torus" => {
                    let m = parse_cycle_order(r_spec)?;
                    l.torus_product(m)
                }
                other => Err(Error::parse(
                    1,
                    left.len() + 2,
                    format!("unknown product '{other}' (expected box or torus)"),
                )),
            }
        }
        _ => Err(Error::parse(
            1,
            1,
            "expected a spec like C12(1,6) or a product like 'K3 box C7'",
        )),
    }
}

fn parse_atom(text: &str) -> Result<Graph, Error> {
    if let Some(rest) = text.strip_prefix('K') {
        if let Ok(n) = rest.parse::<usize>() {
            if n == 0 {
                return Err(Error::parse(1, 2, "complete graph needs n >= 1"));
            }
            return Ok(Graph::complete(n));
        }
    }
    if text.starts_with('C') && !text.contains('(') {
        let n = parse_cycle_order(text)?;
        return Ok(Graph::cycle(n));
    }
    Ok(CirculantSpec::parse(text)?.build())
}

fn parse_cycle_order(text: &str) -> Result<usize, Error> {
    let rest = text
        .strip_prefix('C')
        .ok_or_else(|| Error::parse(1, 1, format!("expected a cycle like C6, got '{text}'")))?;
    let n: usize = rest
        .parse()
        .map_err(|_| Error::parse(1, 2, format!("bad cycle order '{rest}'")))?;
    if n < 3 {
        return Err(Error::parse(1, 2, "cycles need at least 3 vertices"));
    }
    Ok(n)
}

fn parse_filled(text: &str, order: usize) -> Result<VertexSet, Error> {
    let mut f = VertexSet::empty(order);
    for (i, tok) in text.split(',').enumerate() {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        let v: usize = tok
            .parse()
            .map_err(|_| Error::parse(1, i + 1, format!("bad vertex '{tok}'")))?;
        if v >= order {
            return Err(Error::parse(
                1,
                i + 1,
                format!("vertex {v} out of range for order {order}"),
            ));
        }
        f.insert(v);
    }
    Ok(f)
}

fn parse_construction(text: &str) -> Result<WitnessConstruction, Error> {
    let parts: Vec<&str> = text.split(':').collect();
    let num = |s: &str| -> Result<usize, Error> {
        s.parse()
            .map_err(|_| Error::parse(1, 1, format!("bad construction parameter '{s}'")))
    };
    match parts.as_slice() {
        ["two-columns", n, m] => Ok(WitnessConstruction::TwoColumns {
            n: num(n)?,
            m: num(m)?,
        }),
        ["three-columns", n] => Ok(WitnessConstruction::ThreeColumns { n: num(n)? }),
        ["neighborhood", n] => Ok(WitnessConstruction::ClosedNeighborhood { n: num(n)? }),
        ["cycle-columns", n, m] => Ok(WitnessConstruction::CycleColumns {
            n: num(n)?,
            m: num(m)?,
        }),
        _ => Err(Error::parse(
            1,
            1,
            "expected two-columns:<n>:<m>, three-columns:<n>, neighborhood:<n>, or cycle-columns:<n>:<m>",
        )),
    }
}

fn rank_of_named(name: &str) -> Result<(usize, usize), Error> {
    let parts: Vec<&str> = name.split(':').collect();
    let num = |s: &str| -> Result<usize, Error> {
        s.parse()
            .map_err(|_| Error::parse(1, 1, format!("bad witness parameter '{s}'")))
    };
    match parts.as_slice() {
        ["c9"] => {
            let m = witness_c913();
            Ok((m.rank(), m.nullity()))
        }
        ["k4", n] => {
            let m = witness_k4(num(n)?)?;
            Ok((m.rank(), m.nullity()))
        }
        ["k6", n] => {
            let m = witness_k6(num(n)?)?;
            Ok((m.rank(), m.nullity()))
        }
        ["hankel", n] => {
            let (m, _) = hankel(num(n)?)?;
            Ok((m.rank(), m.nullity()))
        }
        _ => Err(Error::parse(
            1,
            1,
            "expected c9, k4:<n>, k6:<n>, or hankel:<n>",
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn targets() {
        assert_eq!(parse_target("C12(1,6)").unwrap().order(), 12);
        assert_eq!(parse_target("K3 box C7").unwrap().order(), 21);
        assert_eq!(parse_target("K3 torus C6").unwrap().order(), 18);
        assert_eq!(parse_target("C4 torus C5").unwrap().order(), 20);
        assert_eq!(parse_target("K5").unwrap().edge_count(), 10);
        assert!(parse_target("K3 ladder C7").is_err());
        assert!(parse_target("K3 torus C2").is_err());
        assert!(parse_target("Q5").is_err());
    }

    #[test]
    fn filled_lists() {
        let f = parse_filled("0, 2,5", 6).unwrap();
        assert_eq!(f.iter().collect::<Vec<_>>(), vec![0, 2, 5]);
        assert!(parse_filled("7", 6).is_err());
        assert!(parse_filled("x", 6).is_err());
    }

    #[test]
    fn constructions() {
        assert_eq!(
            parse_construction("two-columns:3:6").unwrap(),
            WitnessConstruction::TwoColumns { n: 3, m: 6 }
        );
        assert_eq!(
            parse_construction("neighborhood:5").unwrap(),
            WitnessConstruction::ClosedNeighborhood { n: 5 }
        );
        assert!(parse_construction("bogus").is_err());
    }
}
