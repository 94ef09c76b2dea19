//! `nilclean`: classify finite rings, search decompositions, run the survey.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a characterization
//! disagrees with its class (or a catalog expectation is not met).

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use nilclean::catalog::{survey_set_with, Catalog};
use nilclean::classifier::{cross_check, cross_check_all, RingClass, Verdict};
use nilclean::decompose::{find_decomposition, Shape};
use nilclean::expr::parse_ring_expr;
use nilclean::ring::{RingBuilder, DEFAULT_ORDER_CAP};
use nilclean::{CharacterizationId, CharacterizationReport, Error, RingTable};

#[derive(Parser)]
#[command(
    name = "nilclean",
    version,
    about = "Finite ring laboratory for nil-clean characterizations"
)]
struct Cli {
    /// Emit JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,
    /// Largest ring order that may be built.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_ORDER_CAP)]
    max_order_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every characterization on a ring.
    Classify {
        /// Ring expression such as "Z/12", "GF(3^2)", "M2(Z/2) x @example3.5",
        /// or "-" to read a ring table as JSON from stdin.
        expr: String,
    },
    /// Search a commuting decomposition of one element.
    Decompose {
        expr: String,
        /// Element index.
        index: usize,
        /// Comma list of part kinds from {e, t, p5, v}; the nilpotent is implicit.
        #[arg(long, value_name = "LIST")]
        shape: String,
    },
    /// Cross-check the survey corpus up to the given order.
    Survey { max_order: usize },
}

enum Failure {
    Input(String),
    Inconsistent,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Inconsistent) => ExitCode::from(2),
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let catalog = Catalog::from_env()?;
    let builder = RingBuilder::with_cap(cli.max_order_cap);
    match &cli.command {
        Command::Classify { expr } => {
            let ring = load_ring(expr, &builder, &catalog)?;
            let report = cross_check(&ring);
            if cli.json {
                println!("{}", to_json(&report));
            } else {
                print!("{}", render_report(&report));
            }
            if report.is_consistent() {
                Ok(())
            } else {
                Err(Failure::Inconsistent)
            }
        }
        Command::Decompose { expr, index, shape } => {
            let ring = load_ring(expr, &builder, &catalog)?;
            let shape: Shape = shape.parse()?;
            let a = ring.element(*index)?;
            let found = find_decomposition(&ring, a, &shape);
            if cli.json {
                println!("{}", to_json(&found));
            } else {
                match found {
                    Some(w) => {
                        let parts: Vec<String> = w.parts.iter().map(|x| x.to_string()).collect();
                        println!("[{}] + nil {}  ({shape})", parts.join(","), w.nilpotent);
                    }
                    None => println!("none"),
                }
            }
            Ok(())
        }
        Command::Survey { max_order } => {
            if *max_order > cli.max_order_cap {
                return Err(Failure::Input(format!(
                    "survey order {max_order} exceeds the order cap {} (raise it with --max-order-cap)",
                    cli.max_order_cap
                )));
            }
            survey(&catalog, *max_order, cli.json)
        }
    }
}

fn to_json<T: serde::Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn load_ring(expr: &str, builder: &RingBuilder, catalog: &Catalog) -> Result<RingTable, Failure> {
    if expr.trim() == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Input(format!("reading stdin: {e}")))?;
        let ring = RingTable::from_json(&text)?;
        if ring.order() > builder.order_cap {
            return Err(Error::OrderCapExceeded {
                requested: ring.order() as u128,
                cap: builder.order_cap,
            }
            .into());
        }
        return Ok(if ring.label().is_empty() {
            ring.with_label("stdin")
        } else {
            ring
        });
    }
    let ast = parse_ring_expr(expr).map_err(|e| match e {
        Error::Parse { offset, .. } => {
            Failure::Input(format!("{e}\n  {expr}\n  {}^", " ".repeat(offset)))
        }
        other => other.into(),
    })?;
    Ok(ast.build(builder, catalog)?)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render_report(rep: &CharacterizationReport) -> String {
    let mut out = format!("ring {} (order {})\n", rep.ring, rep.order);
    let groups = [
        (RingClass::S2nc, "strongly 2-nil-clean forms"),
        (RingClass::Znc, "Zhou nil-clean forms"),
    ];
    for (class, title) in groups {
        out.push_str(&format!("\n{title}\n"));
        for id in class.members() {
            out.push_str(&predicate_line(rep, id));
        }
        let verdict = match rep.equivalences[&class] {
            Verdict::Consistent => "consistent".to_string(),
            Verdict::Inconsistent => {
                let ids: Vec<String> = rep.disagreements[&class]
                    .iter()
                    .map(|id| id.to_string())
                    .collect();
                format!("INCONSISTENT ({} disagree)", ids.join(", "))
            }
        };
        out.push_str(&format!(
            "  {} = {}  verdict: {verdict}\n",
            class.as_str(),
            yes_no(rep.class_holds(class))
        ));
    }
    out.push_str("\nseparations\n");
    for (key, s) in &rep.separations {
        let note = if s.strictly_exceeds {
            "  strictly weaker here"
        } else {
            ""
        };
        out.push_str(&format!(
            "  {key:<18} holds {:<3}  class {:<3}{note}\n",
            yes_no(s.holds),
            yes_no(s.class_holds)
        ));
    }
    let c = &rep.classification;
    out.push_str("\nelements\n");
    for (name, set) in [
        ("nilpotents", &c.nilpotents),
        ("idempotents", &c.idempotents),
        ("tripotents", &c.tripotents),
        ("5-potents", &c.five_potents),
        ("involutions", &c.involutions),
        ("units", &c.units),
        ("squares", &c.squares),
    ] {
        out.push_str(&format!("  {name:<12} {:?}\n", set.indices()));
    }
    out
}

fn predicate_line(rep: &CharacterizationReport, id: CharacterizationId) -> String {
    let p = rep.predicates[&id];
    let witness = p
        .witness
        .map(|w| format!("fails at {w}"))
        .unwrap_or_default();
    let line = format!(
        "  {:<16} {:<46} {:<3}  {witness}",
        id.as_str(),
        id.describe(),
        yes_no(p.holds)
    );
    format!("{}\n", line.trim_end())
}

fn survey(catalog: &Catalog, max_order: usize, json: bool) -> Result<(), Failure> {
    let entries = survey_set_with(catalog, max_order);
    let rings: Vec<RingTable> = entries.iter().map(|e| e.ring.clone()).collect();
    let reports = cross_check_all(&rings);
    let mismatches: Vec<String> = entries
        .iter()
        .zip(&reports)
        .flat_map(|(e, rep)| e.mismatches(rep))
        .collect();
    let inconsistent: Vec<&CharacterizationReport> =
        reports.iter().filter(|r| !r.is_consistent()).collect();

    if json {
        println!("{}", to_json(&reports));
    } else {
        println!(
            "{:<14} {:>5}  {:<5} {:<5} {:<12} separations",
            "ring", "order", "S2NC", "ZNC", "verdict"
        );
        for rep in &reports {
            let seps: Vec<&str> = rep
                .separations
                .iter()
                .filter(|(_, s)| s.strictly_exceeds)
                .map(|(k, _)| k.as_str())
                .collect();
            let row = format!(
                "{:<14} {:>5}  {:<5} {:<5} {:<12} {}",
                rep.ring,
                rep.order,
                yes_no(rep.class_holds(RingClass::S2nc)),
                yes_no(rep.class_holds(RingClass::Znc)),
                if rep.is_consistent() {
                    "consistent"
                } else {
                    "INCONSISTENT"
                },
                seps.join(", ")
            );
            println!("{}", row.trim_end());
        }
        println!();
    }
    for rep in &inconsistent {
        let ids: Vec<String> = rep
            .disagreements
            .values()
            .flatten()
            .map(|id| id.to_string())
            .collect();
        eprintln!("inconsistent: {} ({})", rep.ring, ids.join(", "));
    }
    for m in &mismatches {
        eprintln!("catalog mismatch: {m}");
    }
    let ok = inconsistent.is_empty() && mismatches.is_empty();
    if !json {
        println!(
            "{} rings, {} inconsistent, {} catalog mismatches: {}",
            reports.len(),
            inconsistent.len(),
            mismatches.len(),
            if ok { "OK" } else { "FAILED" }
        );
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Inconsistent)
    }
}
