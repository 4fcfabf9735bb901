use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use supersym::algebra::{
    asp_generators, cancellation_test, hypothesis2_cell, is_bisymmetric, is_p_balanced,
    cancellation_test_laurent, subalgebra_membership, GeneratorSet, DEFAULT_MAX_PRODUCTS,
};
use supersym::campaign::{run_campaign, CampaignSpec};
use supersym::characters::{gl11_simple_char, leading_summands, SuperBasis};
use supersym::generators::GeneratorId;
use supersym::json::{parse_polynomial, to_json_string};
use supersym::poset::{
    dk_weight_sequence, interval_nonneg_dominant, leq, predecessors, Cone, PosetElement, PosetKind,
    WeightIdeal,
};
use supersym::{Error, LaurentPolynomial, Profile, Result, Weight};

#[derive(Parser)]
#[command(name = "supersym", version, about = "Exact GL(m|n) supercharacter and supersymmetric polynomial tools")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Even block size
    #[arg(long, global = true)]
    m: Option<usize>,
    /// Odd block size
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Prime characteristic (omit for Q)
    #[arg(long, global = true)]
    p: Option<u64>,
    /// Overrides the campaign seed
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Structured JSON output
    #[arg(long, global = true)]
    json: bool,
    /// Degree cap for membership queries
    #[arg(long, global = true, default_value_t = 12)]
    cap: i64,
    /// Worker threads for campaigns (0 = all cores)
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named generator: c:R, d:R, ber, sx:I, sy:J, u:K, e:x:I, h:y:J
    Gen { id: String },
    /// Supercharacters of E, E*, their powers, and GL(1|1) simples
    Char {
        #[command(subcommand)]
        which: CharCmd,
    },
    /// Leading summands of a polynomial document (path or -)
    Leading { file: String },
    /// Supersymmetry test of a polynomial document
    CheckSs { file: String },
    /// p-balance test of a polynomial document
    CheckPbal { file: String },
    /// Subalgebra membership of a polynomial document
    Member {
        file: String,
        /// Comma-separated generator ids; defaults to c:1..c:cap
        #[arg(long, value_delimiter = ',')]
        gens: Vec<String>,
        /// Use the A_s(p) generators
        #[arg(long)]
        asp: bool,
    },
    /// Is A_s in one degree generated by A_s(p) and the c_r
    Hyp2 {
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_PRODUCTS)]
        max_products: usize,
    },
    /// Dominance-order queries
    Poset {
        #[command(subcommand)]
        which: PosetCmd,
    },
    /// Run a campaign spec file
    Campaign { spec: String },
}

#[derive(Subcommand)]
enum CharCmd {
    Std,
    Dual,
    Ext {
        r: usize,
        #[arg(long)]
        dual: bool,
    },
    Sym {
        r: usize,
        #[arg(long)]
        dual: bool,
    },
    Gl11 {
        #[arg(allow_hyphen_values = true)]
        i: i64,
        #[arg(allow_hyphen_values = true)]
        r: i64,
    },
}

#[derive(Subcommand)]
enum PosetCmd {
    /// Is A ≤ B
    Leq {
        #[arg(allow_hyphen_values = true)]
        a: Weight,
        #[arg(allow_hyphen_values = true)]
        b: Weight,
    },
    /// Immediate predecessors
    Pred {
        #[arg(allow_hyphen_values = true)]
        lambda: Weight,
        #[arg(long, default_value = "dominant")]
        cone: Cone,
    },
    /// Nonnegative dominant weights below MU
    Interval { mu: Weight },
    /// Donkin-Koppinen weight sequence of an ideal of X(T)^- × X(T)^+
    Dk {
        /// Generator (-λ, λ), repeatable
        #[arg(long = "diag", allow_hyphen_values = true)]
        diag: Vec<Weight>,
        /// Generator "MINUS;PLUS", repeatable
        #[arg(long = "pair", allow_hyphen_values = true)]
        pair: Vec<String>,
        #[arg(long, default_value_t = 1)]
        cutoff: usize,
    },
}

enum Failure {
    Usage(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read_input(path: &str) -> Result<String> {
    let mut s = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
    } else {
        s = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    }
    Ok(s)
}

impl Global {
    fn profile(&self) -> Result<Profile> {
        Profile::new(self.m.unwrap_or(1), self.n.unwrap_or(1), self.p)
    }

    /// Loads a document; explicit --m/--n/--p must agree with it.
    fn load(&self, path: &str) -> Result<LaurentPolynomial> {
        let f = parse_polynomial(&read_input(path)?)?;
        let pr = f.profile();
        let clash = self.m.is_some_and(|m| m != pr.m())
            || self.n.is_some_and(|n| n != pr.n())
            || (self.p.is_some() && self.p != pr.p());
        if clash {
            return Err(Error::ProfileMismatch(pr.to_string(), "command-line flags".into()));
        }
        Ok(f)
    }

    fn emit_poly(&self, f: &LaurentPolynomial) {
        if self.json {
            println!("{}", to_json_string(f));
        } else {
            println!("{f}");
        }
    }

    fn emit(&self, value: serde_json::Value, text: impl FnOnce() -> String) {
        if self.json {
            println!("{value}");
        } else {
            println!("{}", text());
        }
    }
}

fn weights_json(ws: &[Weight]) -> serde_json::Value {
    json!(ws.iter().map(Weight::entries).collect::<Vec<_>>())
}

fn run(cli: Cli) -> std::result::Result<(), Failure> {
    let g = &cli.global;
    match cli.command {
        Command::Gen { id } => {
            let id: GeneratorId = id.parse()?;
            g.emit_poly(&id.build(&g.profile()?, g.p)?);
        }
        Command::Char { which } => {
            let pr = g.profile()?;
            let e = SuperBasis::standard(pr);
            let f = match which {
                CharCmd::Std => e.supercharacter(),
                CharCmd::Dual => e.dual().supercharacter(),
                CharCmd::Ext { r, dual } => if dual { e.dual() } else { e }.exterior_power_char(r),
                CharCmd::Sym { r, dual } => if dual { e.dual() } else { e }.symmetric_power_char(r),
                CharCmd::Gl11 { i, r } => gl11_simple_char(&pr, i, r)?,
            };
            g.emit_poly(&f);
        }
        Command::Leading { file } => {
            let f = g.load(&file)?;
            let lead = leading_summands(&f)?;
            let m = f.profile().m();
            let value = json!(lead
                .iter()
                .map(|(w, c)| json!({"e": w.entries(), "c": c.to_canonical_string()}))
                .collect::<Vec<_>>());
            g.emit(value, || {
                lead.iter()
                    .map(|(w, c)| format!("{} {}", w.display_split(m), c.to_canonical_string()))
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
        Command::CheckSs { file } => {
            let f = g.load(&file)?;
            let bisym = is_bisymmetric(&f);
            let cancel = if f.is_polynomial() {
                cancellation_test(&f)?
            } else {
                cancellation_test_laurent(&f)
            };
            let ss = bisym && cancel;
            let value = json!({
                "supersymmetric": ss,
                "bisymmetric": bisym,
                "cancellation": cancel,
                "laurent": !f.is_polynomial(),
            });
            g.emit(value, || format!("supersymmetric: {ss} (bisymmetric: {bisym}, cancellation: {cancel})"));
        }
        Command::CheckPbal { file } => {
            let f = g.load(&file)?;
            let p = g
                .p
                .or(f.profile().p())
                .ok_or_else(|| Error::InvalidArgument("check-pbal needs --p or a document with p".into()))?;
            let balanced = is_p_balanced(&f, p)?;
            g.emit(json!({"p": p, "p_balanced": balanced}), || format!("{p}-balanced: {balanced}"));
        }
        Command::Member { file, gens, asp } => {
            let f = g.load(&file)?;
            let pr = *f.profile();
            let set = if asp {
                let p = pr
                    .p()
                    .ok_or_else(|| Error::InvalidArgument("--asp needs a document over F_p".into()))?;
                asp_generators(&pr, p)?
            } else if gens.is_empty() {
                supersym::algebra::c_generator_set(&pr, g.cap.max(1) as usize)
            } else {
                let ids = gens
                    .iter()
                    .map(|s| s.parse())
                    .collect::<Result<Vec<GeneratorId>>>()?;
                GeneratorSet::from_ids(&pr, &ids, pr.p())?
            };
            let report = subalgebra_membership(&f, &set, g.cap)?;
            g.emit(serde_json::to_value(&report).expect("report serializes"), || {
                let mut s = format!("member: {}", report.member);
                for t in &report.combination {
                    let prod = if t.factors.is_empty() { "1".into() } else { t.factors.join("*") };
                    s.push_str(&format!("\n  {} * {}", t.coefficient, prod));
                }
                s
            });
        }
        Command::Hyp2 { degree, max_products } => {
            let pr = g.profile()?;
            let report = hypothesis2_cell(&pr, degree, max_products)?;
            g.emit(serde_json::to_value(&report).expect("report serializes"), || {
                format!(
                    "{} (A_s dim {}, span dim {}, {} ms)",
                    serde_json::to_value(report.status).unwrap().as_str().unwrap(),
                    report.basis_dim,
                    report.span_dim,
                    report.runtime_ms
                )
            });
        }
        Command::Poset { which } => poset(g, which)?,
        Command::Campaign { spec } => {
            let mut spec = CampaignSpec::from_json(&read_input(&spec)?)?;
            if let Some(seed) = g.seed {
                spec.seed = seed;
            }
            let report = run_campaign(&spec, g.jobs)?;
            let rendered = report.render(spec.format);
            if spec.output == "-" {
                print!("{rendered}");
            } else {
                std::fs::File::create(&spec.output)
                    .and_then(|mut f| f.write_all(rendered.as_bytes()))
                    .map_err(|e| Failure::Usage(format!("{}: {e}", spec.output)))?;
            }
            if !report.success() {
                return Err(Failure::Checks);
            }
        }
    }
    Ok(())
}

fn poset(g: &Global, which: PosetCmd) -> std::result::Result<(), Failure> {
    let pr = g.profile()?;
    match which {
        PosetCmd::Leq { a, b } => {
            let r = leq(&a, &b)?;
            g.emit(json!(r), || r.to_string());
        }
        PosetCmd::Pred { lambda, cone } => {
            let preds = predecessors(&pr, &lambda, cone)?;
            g.emit(weights_json(&preds), || {
                preds.iter().map(|w| w.display_split(pr.m())).collect::<Vec<_>>().join("\n")
            });
        }
        PosetCmd::Interval { mu } => {
            let ws = interval_nonneg_dominant(&pr, &mu)?;
            g.emit(weights_json(&ws), || {
                ws.iter().map(|w| w.display_split(pr.m())).collect::<Vec<_>>().join("\n")
            });
        }
        PosetCmd::Dk { diag, pair, cutoff } => {
            let mut gens: Vec<PosetElement> = diag.iter().map(PosetElement::diagonal).collect();
            for s in &pair {
                let (a, b) = s
                    .split_once(';')
                    .ok_or_else(|| Error::Parse(format!("pair {s:?} should be MINUS;PLUS")))?;
                gens.push(PosetElement::pair(a.parse()?, b.parse()?));
            }
            let ideal = WeightIdeal::new(pr, PosetKind::Product, gens)?;
            let seq = dk_weight_sequence(&ideal, cutoff)?;
            g.emit(weights_json(&seq), || {
                seq.iter().map(|w| w.display_split(pr.m())).collect::<Vec<_>>().join("\n")
            });
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
