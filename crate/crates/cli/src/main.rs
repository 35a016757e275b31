use std::fmt::Write as _;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use spinblocks::abacus::{BarAbacus, TwistedBarAbacus};
use spinblocks::blocks::{spin_blocks, verify, Suite, VerificationReport, VerifyOptions};
use spinblocks::characters::{label_heights, Group};
use spinblocks::galois::{tau_partition, tau_selfconjugate, GaloisElement};
use spinblocks::humphreys::{g_block_invariants, GBlockId, GGroup};
use spinblocks::littlewood::{
    bar_decompose, is_bar_core, ordinary_decompose, paired_parts, selfconjugate_paired_hooks, BarLittlewood,
    OrdinaryLittlewood,
};
use spinblocks::partitions::strict_up_to;
use spinblocks::{BarPartition, Partition};

#[derive(Parser)]
#[command(
    name = "spinblocks",
    version,
    about = "p-bar abaci, Galois signs and block bijections for spin characters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Odd modulus (a prime wherever Galois action is involved).
    #[arg(long)]
    p: usize,
    /// Print machine-readable JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PartitionInput {
    /// Parts separated by commas, e.g. "5,3,1"; empty for ∅.
    #[arg(value_name = "PARTITION")]
    positional: Option<String>,
    #[arg(long = "partition", value_name = "PARTITION", conflicts_with = "positional")]
    flag: Option<String>,
}

impl PartitionInput {
    fn literal(&self) -> Result<&str> {
        self.positional
            .as_deref()
            .or(self.flag.as_deref())
            .ok_or_else(|| anyhow!("a partition is required"))
    }

    fn partition(&self) -> Result<Partition> {
        let s = self.literal()?;
        s.parse().with_context(|| format!("reading partition {s:?}"))
    }

    fn bar(&self) -> Result<BarPartition> {
        let s = self.literal()?;
        s.parse().with_context(|| format!("reading bar-partition {s:?}"))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Stilde,
    Atilde,
    G,
    Gplus,
}

#[derive(Subcommand)]
enum Command {
    /// Core, quotient, characteristic vector, weight, cocore and d.
    Decompose {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        input: PartitionInput,
        /// Ordinary p-core decomposition instead of the p-bar one.
        #[arg(long)]
        nonspin: bool,
    },
    /// Draws the p-bar abacus.
    Abacus {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        input: PartitionInput,
        #[arg(long)]
        twisted: bool,
    },
    /// The sign τ(λ, f) for f = (p, e, s).
    Tau {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        input: PartitionInput,
        #[arg(long, default_value_t = 1)]
        e: u32,
        #[arg(long, default_value_t = 1)]
        s: u64,
        /// Self-conjugate partition, diagonal hooks in place of parts.
        #[arg(long)]
        nonspin: bool,
    },
    /// Paired parts of a p-bar cocore (or paired diagonal hooks with --nonspin).
    Pairs {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        input: PartitionInput,
        #[arg(long)]
        nonspin: bool,
    },
    /// Every block at n with members, heights and defect.
    Blocks {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "stilde")]
        group: GroupArg,
    },
    /// Runs a verification suite.
    Verify {
        /// One of roundtrip, lengths, signs, sizes, pairing, oracle, little,
        /// phi, valuation, blocks, census, psi, crossing, crossing_fails,
        /// nonspin_tau, durfee, nonspin_psi.
        suite: String,
        #[command(flatten)]
        common: Common,
        /// Largest |λ| (m for oracle, |κ| for block suites).
        #[arg(long)]
        max_n: usize,
        /// Largest weight for block suites.
        #[arg(long, default_value_t = 3)]
        max_w: usize,
        /// Pass only if violations are found.
        #[arg(long)]
        expect_violations: bool,
    },
}

fn show(lambda: &Partition) -> String {
    if lambda.is_empty() {
        "∅".to_string()
    } else {
        lambda.to_string()
    }
}

fn show_core(kappa: &Partition) -> String {
    if kappa.is_empty() {
        "∅".to_string()
    } else {
        format!("({kappa})")
    }
}

fn show_quotient(quotient: &[Partition]) -> String {
    let parts: Vec<String> = quotient
        .iter()
        .map(|q| {
            if q.is_empty() {
                "∅".to_string()
            } else {
                format!("({q})")
            }
        })
        .collect();
    format!("({})", parts.join(", "))
}

fn show_ints(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(", "))
}

fn bar_text(lambda: &BarPartition, dec: &BarLittlewood) -> String {
    format!(
        "partition: {}\np: {}\ncore: {}\nquotient: {}\ncharvec: {}\nweight: {}\ncocore: {}\nd: {}\n",
        show(lambda),
        dec.t,
        show(&dec.core),
        show_quotient(&dec.quotient),
        show_ints(&dec.charvec),
        dec.weight,
        show(&dec.cocore),
        dec.d
    )
}

fn ordinary_text(lambda: &Partition, dec: &OrdinaryLittlewood) -> String {
    format!(
        "partition: {}\np: {}\ncore: {}\nquotient: {}\ncharvec: {}\nweight: {}\ncocore: {}\nd: {}\n",
        show(lambda),
        dec.p,
        show(&dec.core),
        show_quotient(&dec.quotient),
        show_ints(&dec.charvec),
        dec.weight,
        show(&dec.cocore),
        dec.d.map_or("-".to_string(), |d| d.to_string())
    )
}

fn to_json(value: serde_json::Value) -> Result<String> {
    Ok(serde_json::to_string_pretty(&value)? + "\n")
}

fn blocks_output(n: usize, p: usize, group: GroupArg, as_json: bool) -> Result<String> {
    let mut text = String::new();
    let mut entries = Vec::new();
    match group {
        GroupArg::Stilde | GroupArg::Atilde => {
            let group = if matches!(group, GroupArg::Stilde) {
                Group::Stilde
            } else {
                Group::Atilde
            };
            for (id, members) in spin_blocks(n, p, group)? {
                let inv = label_heights(&members, n, p)?;
                writeln!(
                    text,
                    "block κ = {}, w = {}, defect {}",
                    show_core(&id.kappa),
                    id.w,
                    inv.defect
                )?;
                for (label, h) in &inv.heights {
                    writeln!(text, "  {label}  height {h}")?;
                }
                entries.push(json!({
                    "kappa": id.kappa, "w": id.w, "group": id.group, "p": p, "defect": inv.defect,
                    "members": inv.heights.iter().map(|(l, h)| json!({"label": l, "height": h})).collect::<Vec<_>>(),
                }));
            }
        }
        GroupArg::G | GroupArg::Gplus => {
            let group = if matches!(group, GroupArg::G) {
                GGroup::G
            } else {
                GGroup::Gplus
            };
            for kappa in strict_up_to(n) {
                if !(n - kappa.size()).is_multiple_of(p) || !is_bar_core(&kappa, p)? {
                    continue;
                }
                let id = GBlockId {
                    w: (n - kappa.size()) / p,
                    kappa,
                    group,
                    p,
                };
                let inv = g_block_invariants(&id)?;
                writeln!(
                    text,
                    "block κ = {}, w = {}, defect {}",
                    show_core(&id.kappa),
                    id.w,
                    inv.defect
                )?;
                for (label, h) in &inv.heights {
                    writeln!(text, "  {label}  height {h}")?;
                }
                entries.push(json!({
                    "kappa": id.kappa, "w": id.w, "group": id.group, "p": p, "defect": inv.defect,
                    "members": inv.heights.iter().map(|(l, h)| json!({"label": l, "height": h})).collect::<Vec<_>>(),
                }));
            }
        }
    }
    if as_json {
        to_json(json!(entries))
    } else {
        Ok(text)
    }
}

fn report_text(report: &VerificationReport, pass: bool) -> Result<String> {
    let mut text = format!("suite: {}\np: {}\nbound: {}\n", report.suite, report.p, report.bound);
    if let Some(w) = report.max_w {
        writeln!(text, "max_w: {w}")?;
    }
    writeln!(text, "cases: {}", report.cases)?;
    writeln!(text, "violations: {}", report.violations.len())?;
    if let Some(w) = report.violations.first() {
        writeln!(text, "first violation: {}: {} vs {}", w.input, w.lhs, w.rhs)?;
    }
    for (key, count) in &report.tallies {
        writeln!(text, "{key}: {count}")?;
    }
    for note in &report.notes {
        writeln!(text, "note: {note}")?;
    }
    writeln!(text, "result: {}", if pass { "pass" } else { "fail" })?;
    Ok(text)
}

/// Output and exit code of a well-formed invocation.
fn run(cli: Cli) -> Result<(String, u8)> {
    let out = match cli.command {
        Command::Decompose { common, input, nonspin } => {
            if nonspin {
                let lambda = input.partition()?;
                let dec = ordinary_decompose(&lambda, common.p)?;
                if common.json {
                    to_json(json!(dec))?
                } else {
                    ordinary_text(&lambda, &dec)
                }
            } else {
                let lambda = input.bar()?;
                let dec = bar_decompose(&lambda, common.p)?;
                if common.json {
                    to_json(json!(dec))?
                } else {
                    bar_text(&lambda, &dec)
                }
            }
        }
        Command::Abacus { common, input, twisted } => {
            let lambda = input.bar()?;
            match (twisted, common.json) {
                (false, false) => BarAbacus::new(&lambda, common.p)?.render(),
                (false, true) => to_json(json!(BarAbacus::new(&lambda, common.p)?))?,
                (true, false) => TwistedBarAbacus::new(&lambda, common.p)?.render(),
                (true, true) => to_json(json!(TwistedBarAbacus::new(&lambda, common.p)?))?,
            }
        }
        Command::Tau {
            common,
            input,
            e,
            s,
            nonspin,
        } => {
            let f = GaloisElement::new(common.p as u64, e, s)?;
            let (lambda, sign) = if nonspin {
                let lambda = input.partition()?;
                let sign = tau_selfconjugate(&lambda, f)?;
                (lambda, sign)
            } else {
                let lambda = input.bar()?;
                let sign = tau_partition(&lambda, f);
                (lambda.into_partition(), sign)
            };
            if common.json {
                to_json(json!({"partition": lambda, "f": f, "tau": sign}))?
            } else {
                format!("{sign}\n")
            }
        }
        Command::Pairs { common, input, nonspin } => {
            let pairs = if nonspin {
                selfconjugate_paired_hooks(&input.partition()?, common.p)?
            } else {
                paired_parts(&input.bar()?, common.p)?
            };
            if common.json {
                to_json(json!(pairs))?
            } else {
                pairs.iter().map(|(a, b)| format!("({a}, {b})\n")).collect()
            }
        }
        Command::Blocks { common, n, group } => blocks_output(n, common.p, group, common.json)?,
        Command::Verify {
            suite,
            common,
            max_n,
            max_w,
            expect_violations,
        } => {
            let suite: Suite = suite.parse()?;
            let report = verify(
                suite,
                VerifyOptions {
                    p: common.p,
                    bound: max_n,
                    max_w,
                },
            )?;
            let pass = report.passed() != expect_violations;
            let text = if common.json {
                to_json(json!(report))?
            } else {
                report_text(&report, pass)?
            };
            return Ok((text, if pass { 0 } else { 1 }));
        }
    };
    Ok((out, 0))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
