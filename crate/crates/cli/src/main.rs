use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use seifert_tight::family::{
    self, max_twist_report, render_count_text, render_triangle_text, render_upper_text,
    FamilyRegistry, FiberFamily, Verdict,
};
use seifert_tight::report::{to_csv, to_json, BigNum};
use seifert_tight::seifert::{
    euler_number, is_equivalent, normalize, seifert_to_decomposition, slam_dunk, Framing,
    SeifertInvariants,
};
use seifert_tight::slope::{cf_eval, honda_count, neg_cf, Mat2, NegCF, Slope};
use seifert_tight::transport::{edge_round, rounded_to_v3, solve_common_twist};
use seifert_tight::{Error, Result};

#[derive(Parser)]
#[command(
    name = "seifert-tight",
    version,
    about = "Slope, Seifert and contact-structure counting calculator"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// SL(2,Z) action on slopes.
    #[command(subcommand)]
    Slope(SlopeCmd),
    /// Negative continued fractions.
    #[command(subcommand)]
    Cf(CfCmd),
    /// Seifert invariants.
    #[command(subcommand)]
    Seifert(SeifertCmd),
    /// Twisting and slope transport through the fibered decomposition.
    #[command(subcommand)]
    Transport(TransportCmd),
    /// Counting for the surgered families.
    #[command(subcommand)]
    Family(FamilyCmd),
}

#[derive(Args)]
struct MatSlope {
    /// Matrix entries a,b,c,d of [[a,b],[c,d]].
    #[arg(long, allow_hyphen_values = true)]
    matrix: Mat2,
    /// Slope p/q or inf.
    #[arg(long, allow_hyphen_values = true)]
    slope: Slope,
}

#[derive(Subcommand)]
enum SlopeCmd {
    /// Image of a slope under the matrix.
    Act(MatSlope),
    /// Image of a slope under the inverse matrix.
    Inv(MatSlope),
}

#[derive(Args)]
struct SlopeArg {
    #[arg(long, allow_hyphen_values = true)]
    slope: Slope,
}

#[derive(Subcommand)]
enum CfCmd {
    /// Expansion [a0, ..., ak] of a slope <= -1.
    Expand(SlopeArg),
    /// Value of an expansion.
    Eval {
        /// Comma-separated digits.
        #[arg(
            long,
            allow_hyphen_values = true,
            value_delimiter = ',',
            required = true
        )]
        digits: Vec<BigInt>,
    },
    /// Number of tight structures on a solid torus with this boundary slope.
    Count(SlopeArg),
}

#[derive(Args)]
struct InvArg {
    /// Presentation M(e0; p1/q1, ...).
    #[arg(long, allow_hyphen_values = true)]
    inv: SeifertInvariants,
}

#[derive(Subcommand)]
enum SeifertCmd {
    Normalize(InvArg),
    /// Are two presentations the same oriented manifold?
    Eq {
        #[command(flatten)]
        inv: InvArg,
        #[arg(long, allow_hyphen_values = true)]
        other: SeifertInvariants,
    },
    Euler(InvArg),
    /// Surgery on a meridian of one leg.
    Slamdunk {
        #[command(flatten)]
        inv: InvArg,
        /// Leg index, starting at 1.
        #[arg(long)]
        leg: usize,
        /// Integer framing or inf.
        #[arg(long, allow_hyphen_values = true)]
        framing: Framing,
        /// Normalize the result.
        #[arg(long)]
        normalize: bool,
    },
    /// Attaching matrices of a three-legged presentation.
    Decompose(InvArg),
}

#[derive(Subcommand)]
enum TransportCmd {
    /// Common twisting number at level k.
    Twist {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        k: u64,
    },
    /// Edge rounding of p1/t and p2/t.
    Round {
        #[arg(long, allow_hyphen_values = true)]
        p1: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        p2: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        t: BigInt,
    },
    /// Carry a rounded-boundary slope to dV3.
    ToV3 {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        slope: Slope,
    },
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    m: u64,
    #[arg(long)]
    n: u64,
    /// F1 or F2.
    #[arg(long, default_value = "F1")]
    fiber: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Bound {
    Lower,
    Upper,
    Closed,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    Triangle,
    Upper,
}

#[derive(Subcommand)]
enum FamilyCmd {
    Count {
        #[command(flatten)]
        p: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Bound::All)]
        bound: Bound,
    },
    Table {
        #[command(flatten)]
        p: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Table::Upper)]
        which: Table,
    },
    /// Exclusion of low twisting numbers, levels 0..=kmax (F1 only).
    Maxtwist {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 4)]
        kmax: u64,
    },
    /// Surgery result next to the stated invariants.
    Target {
        #[command(flatten)]
        p: FamilyArgs,
    },
}

/// A rendered result in all three formats; `ok` is false on a failed
/// consistency check.
struct Out {
    text: String,
    json: String,
    csv: String,
    ok: bool,
}

impl Out {
    fn new<J: Serialize + ?Sized, C: Serialize>(text: String, json: &J, csv: &[C]) -> Result<Out> {
        Ok(Out {
            text,
            json: to_json(json)?,
            csv: to_csv(csv)?,
            ok: true,
        })
    }

    fn failing_if(mut self, bad: bool) -> Out {
        self.ok = !bad;
        self
    }
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

fn digits_string(cf: &NegCF) -> String {
    let d: Vec<String> = cf.digits().iter().map(|x| x.to_string()).collect();
    format!("[{}]", d.join(", "))
}

fn digits_json(cf: &NegCF) -> Vec<BigNum<'_>> {
    cf.digits().iter().map(BigNum).collect()
}

fn run_slope(cmd: SlopeCmd) -> Result<Out> {
    #[derive(Serialize)]
    struct Row {
        matrix: String,
        slope: Slope,
        inverse: bool,
        result: Slope,
    }
    let (args, inverse) = match cmd {
        SlopeCmd::Act(a) => (a, false),
        SlopeCmd::Inv(a) => (a, true),
    };
    let mat = if inverse {
        args.matrix.invert()
    } else {
        args.matrix.clone()
    };
    let row = Row {
        matrix: args.matrix.to_string(),
        slope: args.slope.clone(),
        inverse,
        result: mat.act(&args.slope),
    };
    Out::new(line(&row.result), &row, &[&row])
}

fn run_cf(cmd: CfCmd) -> Result<Out> {
    match cmd {
        CfCmd::Expand(SlopeArg { slope }) => {
            #[derive(Serialize)]
            struct Row {
                slope: Slope,
                digits: String,
            }
            let cf = neg_cf(&slope)?;
            let row = Row {
                slope: slope.clone(),
                digits: cf
                    .digits()
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            };
            let json = serde_json::json!({ "slope": slope, "digits": digits_json(&cf) });
            Out::new(line(digits_string(&cf)), &json, &[row])
        }
        CfCmd::Eval { digits } => {
            #[derive(Serialize)]
            struct Row {
                digits: String,
                slope: Slope,
            }
            let cf = NegCF::new(digits)?;
            let slope = cf_eval(&cf);
            let row = Row {
                digits: cf
                    .digits()
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
                slope: slope.clone(),
            };
            let json = serde_json::json!({ "digits": digits_json(&cf), "slope": slope });
            Out::new(line(&slope), &json, &[row])
        }
        CfCmd::Count(SlopeArg { slope }) => {
            #[derive(Serialize)]
            struct Row {
                slope: Slope,
                #[serde(serialize_with = "seifert_tight::report::big")]
                count: BigInt,
            }
            let row = Row {
                count: honda_count(&slope)?,
                slope,
            };
            Out::new(line(&row.count), &row, &[&row])
        }
    }
}

fn leg_index(leg: usize) -> Result<usize> {
    leg.checked_sub(1)
        .ok_or_else(|| Error::domain("slamdunk", "legs are numbered from 1"))
}

fn run_seifert(cmd: SeifertCmd) -> Result<Out> {
    match cmd {
        SeifertCmd::Normalize(InvArg { inv }) => {
            #[derive(Serialize)]
            struct Row {
                input: String,
                normalized: String,
            }
            let n = normalize(&inv);
            let json = serde_json::json!({ "input": inv, "normalized": n });
            let row = Row {
                input: inv.to_string(),
                normalized: n.to_string(),
            };
            Out::new(line(&n), &json, &[row])
        }
        SeifertCmd::Eq {
            inv: InvArg { inv },
            other,
        } => {
            #[derive(Serialize)]
            struct Row {
                left: String,
                right: String,
                equivalent: bool,
            }
            let eq = is_equivalent(&inv, &other);
            let json = serde_json::json!({
                "left": inv,
                "right": other,
                "normalized_left": normalize(&inv),
                "normalized_right": normalize(&other),
                "equivalent": eq,
            });
            let row = Row {
                left: inv.to_string(),
                right: other.to_string(),
                equivalent: eq,
            };
            Out::new(line(eq), &json, &[row])
        }
        SeifertCmd::Euler(InvArg { inv }) => {
            #[derive(Serialize)]
            struct Row {
                input: String,
                euler: Slope,
            }
            let e = euler_number(&inv);
            let json = serde_json::json!({ "input": inv, "euler": e });
            let row = Row {
                input: inv.to_string(),
                euler: e.clone(),
            };
            Out::new(line(&e), &json, &[row])
        }
        SeifertCmd::Slamdunk {
            inv: InvArg { inv },
            leg,
            framing,
            normalize: norm,
        } => {
            #[derive(Serialize)]
            struct Row {
                input: String,
                leg: usize,
                framing: String,
                result: String,
            }
            let mut out = slam_dunk(&inv, leg_index(leg)?, &framing)?;
            if norm {
                out = normalize(&out);
            }
            let json = serde_json::json!({
                "input": inv,
                "leg": leg,
                "framing": framing.to_string(),
                "result": out,
            });
            let row = Row {
                input: inv.to_string(),
                leg,
                framing: framing.to_string(),
                result: out.to_string(),
            };
            Out::new(line(&out), &json, &[row])
        }
        SeifertCmd::Decompose(InvArg { inv }) => {
            #[derive(Serialize)]
            struct Row {
                leg: usize,
                ratio: Slope,
                matrix: String,
            }
            let d = seifert_to_decomposition(&inv)?;
            let mut legs = inv.ratios().to_vec();
            legs[0] = legs[0].add_integer(inv.e0());
            let rows: Vec<Row> = d
                .attaching()
                .iter()
                .zip(legs)
                .enumerate()
                .map(|(i, (a, r))| Row {
                    leg: i + 1,
                    ratio: r,
                    matrix: a.to_string(),
                })
                .collect();
            let text = rows
                .iter()
                .map(|r| format!("A{} = {}  ({})\n", r.leg, r.matrix, r.ratio))
                .collect();
            Out::new(text, &rows, &rows)
        }
    }
}

fn run_transport(cmd: TransportCmd) -> Result<Out> {
    match cmd {
        TransportCmd::Twist { m, k } => {
            let ct = solve_common_twist(m, k)?;
            let text = format!(
                "m={} k={} n1={} n2={} t={}\n",
                ct.m, ct.k, ct.n1, ct.n2, ct.t
            );
            Out::new(text, &ct, &[&ct])
        }
        TransportCmd::Round { p1, p2, t } => {
            #[derive(Serialize)]
            struct Row<'a> {
                p1: BigNum<'a>,
                p2: BigNum<'a>,
                t: BigNum<'a>,
                rounded: Slope,
            }
            let rounded = edge_round(&p1, &p2, &t)?;
            let row = Row {
                p1: BigNum(&p1),
                p2: BigNum(&p2),
                t: BigNum(&t),
                rounded: rounded.clone(),
            };
            Out::new(line(&rounded), &row, &[&row])
        }
        TransportCmd::ToV3 { m, n, slope } => {
            #[derive(Serialize)]
            struct Row {
                m: u64,
                n: u64,
                rounded: Slope,
                slope_v3: Slope,
            }
            if m == 0 || n == 0 {
                return Err(Error::domain("to-v3", "need m, n >= 1"));
            }
            let row = Row {
                m,
                n,
                slope_v3: rounded_to_v3(m, n, &slope),
                rounded: slope,
            };
            Out::new(line(&row.slope_v3), &row, &[&row])
        }
    }
}

fn lookup<'a>(reg: &'a FamilyRegistry, name: &str) -> Result<&'a dyn FiberFamily> {
    reg.get(name)
}

fn run_family(cmd: FamilyCmd) -> Result<Out> {
    let reg = FamilyRegistry::default();
    match cmd {
        FamilyCmd::Count { p, bound } => {
            let fam = lookup(&reg, &p.fiber)?;
            let (m, n) = (p.m, p.n);
            let single = |label: &str, v: BigInt| -> Result<Out> {
                #[derive(Serialize)]
                struct Row<'a> {
                    fiber: &'a str,
                    m: u64,
                    n: u64,
                    bound: &'a str,
                    value: BigNum<'a>,
                }
                let row = Row {
                    fiber: fam.name(),
                    m,
                    n,
                    bound: label,
                    value: BigNum(&v),
                };
                let mut text = format!("fiber={} m={m} n={n}\n", fam.name());
                if !family::hypothesis_ok(fam, m, n) {
                    text.push_str("warning: n outside the classified range\n");
                }
                text.push_str(&format!("{label}={v}\n"));
                Out::new(text, &row, &[&row])
            };
            match bound {
                Bound::Lower => single("lower", family::lower_bound(fam, m, n)?),
                Bound::Upper => single("upper", family::upper_bound(fam, m, n)?.total),
                Bound::Closed => single("closed", family::closed_form(fam, m, n)?),
                Bound::All => {
                    let r = family::count_report(fam, m, n)?;
                    // outside the classified range the bounds need not meet
                    let bad = r.hypothesis_ok && !r.agrees;
                    Ok(Out::new(render_count_text(&r), &r, &[r.summary()])?.failing_if(bad))
                }
            }
        }
        FamilyCmd::Table { p, which } => {
            let fam = lookup(&reg, &p.fiber)?;
            match which {
                Table::Triangle => {
                    let rows = family::triangle(fam, p.m, p.n)?;
                    Out::new(render_triangle_text(&rows), &rows, &rows)
                }
                Table::Upper => {
                    let u = family::upper_bound(fam, p.m, p.n)?;
                    let text = format!("{}total={}\n", render_upper_text(&u.rows), u.total);
                    Out::new(text, &u, &u.rows)
                }
            }
        }
        FamilyCmd::Maxtwist { m, n, kmax } => {
            let rows = max_twist_report(m, n, kmax)?;
            let text = rows
                .iter()
                .map(|r| format!("k={} t={} s_dV3={} {}\n", r.k, r.t, r.slope_v3, r.note))
                .collect();
            let csv_rows: Vec<_> = rows
                .iter()
                .map(|r| {
                    #[derive(Serialize)]
                    struct Row<'a> {
                        k: u64,
                        t: BigNum<'a>,
                        rounded: &'a Slope,
                        slope_v3: &'a Slope,
                        witness: String,
                        bound: String,
                        verdict: Verdict,
                    }
                    Row {
                        k: r.k,
                        t: BigNum(&r.t),
                        rounded: &r.rounded,
                        slope_v3: &r.slope_v3,
                        witness: r
                            .witness
                            .as_ref()
                            .map(|w| w.to_string())
                            .unwrap_or_default(),
                        bound: r.bound.as_ref().map(|b| b.to_string()).unwrap_or_default(),
                        verdict: r.verdict,
                    }
                })
                .collect();
            Out::new(text, &rows, &csv_rows)
        }
        FamilyCmd::Target { p } => {
            #[derive(Serialize)]
            struct Row<'a> {
                fiber: &'a str,
                m: u64,
                n: u64,
                surgery: String,
                normalized: String,
                stated: String,
                equivalent: bool,
            }
            let fam = lookup(&reg, &p.fiber)?;
            let t = family::target_manifold(fam, p.m, p.n)?;
            let row = Row {
                fiber: fam.name(),
                m: p.m,
                n: p.n,
                surgery: t.surgery.to_string(),
                normalized: normalize(&t.surgery).to_string(),
                stated: t.theorem.to_string(),
                equivalent: t.equivalent,
            };
            let text = format!(
                "surgery    {}\nnormalized {}\nstated     {}\nequivalent={}\n",
                row.surgery, row.normalized, row.stated, row.equivalent
            );
            Ok(Out::new(text, &t, &[&row])?.failing_if(!t.equivalent))
        }
    }
}

fn run(cli: Cli) -> Result<Out> {
    match cli.command {
        Command::Slope(c) => run_slope(c),
        Command::Cf(c) => run_cf(c),
        Command::Seifert(c) => run_seifert(c),
        Command::Transport(c) => run_transport(c),
        Command::Family(c) => run_family(c),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            let body = match format {
                Format::Text => &out.text,
                Format::Json => &out.json,
                Format::Csv => &out.csv,
            };
            print!("{body}");
            if out.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: consistency check failed");
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 2 } else { 3 })
        }
    }
}
