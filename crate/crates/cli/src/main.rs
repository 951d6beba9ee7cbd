//! `satake`: command-line front end to the Hecke/Whittaker library.
//!
//! Exit status: 0 success, 1 a verification battery found a failure,
//! 2 usage error, 3 internal invariant violation.

use std::collections::hash_map::DefaultHasher;
use std::fmt::Write as _;
use std::hash::{Hash, Hasher};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};

use satake_core::grassmannian::{self, CohomologyPrediction};
use satake_core::hecke::SatakeRow;
use satake_core::whittaker::{sample_gammas, value_table_csv};
use satake_core::{
    Basis, BasisElement, Coweight, Error, HeckeAlgebra, LaurentPoly, Rank1Oracle, RootDatum,
    TorusPoint, WhittakerModule,
};

const MAX_JOBS: usize = 256;

#[derive(Parser, Debug)]
#[command(
    name = "satake",
    version,
    about = "Spherical Hecke algebra and Whittaker module calculator"
)]
struct Cli {
    /// Preset name (PGL2, SL2, GL2, SL3, GL3, Sp4, G2), a JSON datum, or a path to one.
    #[arg(long, global = true, default_value = "PGL2")]
    datum: String,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Specialise v² = q at this positive rational instead of printing symbolically.
    #[arg(long, global = true)]
    q: Option<String>,

    /// Worker threads for the verification batteries (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Directory for memoised base-change rows.
    #[arg(long, global = true, env = "SATAKE_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    A,
    C,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose V^λ ⊗ V^μ.
    Tensor {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        mu: String,
    },
    /// All weights of V^λ with multiplicities.
    Weights {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
    /// The base change A_λ = v^{-⟨λ,2ρ̌⟩} Σ_μ p_{λμ} c_μ.
    Satake {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
    /// Multiply two Hecke algebra elements. An operand is a coweight (a basis
    /// vector in --basis), a JSON element, or @FILE holding one.
    HeckeMul {
        #[arg(allow_hyphen_values = true)]
        lhs: String,
        #[arg(allow_hyphen_values = true)]
        rhs: String,
        #[arg(long, value_enum, default_value_t = BasisArg::A)]
        basis: BasisArg,
    },
    /// Values of the unramified Whittaker function W_γ on dominant λ up to a level.
    WhittakerEval {
        /// Comma separated rationals, e.g. 2/1,3.
        #[arg(allow_hyphen_values = true)]
        gamma: String,
        max_level: i64,
        /// Coordinate box, needed for non-semisimple data.
        #[arg(long)]
        coord_bound: Option<i64>,
    },
    /// Predicted cohomology for (λ, μ, ν).
    Predict {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        mu: String,
        #[arg(allow_hyphen_values = true)]
        nu: String,
    },
    /// Strata of the Drinfeld compactification with total degree ≤ bound.
    Strata { bound: i64 },
    /// Whittaker transform, module axioms and eigen-identity on a box.
    VerifyCs {
        cutoff: i64,
        /// Number of torus points for the eigen-identity.
        #[arg(long, default_value_t = 20)]
        gammas: usize,
    },
    /// Rank-one point-counting check of the Whittaker integral formula.
    VerifyEq2 {
        m_max: i64,
        #[arg(required = true)]
        primes: Vec<u64>,
    },
}

enum Failure {
    Usage(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) => Failure::Invariant(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

/// Output of a subcommand plus whether a verification failed.
struct Outcome {
    text: String,
    verification_failed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome {
            text,
            verification_failed: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            if let Err(e) = emit(&cli.out, &outcome.text) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if outcome.verification_failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `satake --help` for usage");
            ExitCode::from(2)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_datum(source: &str) -> CliResult<RootDatum> {
    let path = Path::new(source);
    if !source.trim_start().starts_with('{') && path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {source}: {e}")))?;
        return Ok(RootDatum::build(&text)?);
    }
    Ok(RootDatum::build(source)?)
}

fn parse_q(q: &Option<String>) -> CliResult<Option<BigRational>> {
    let Some(s) = q else { return Ok(None) };
    let s = s.trim();
    let q: BigRational = s
        .parse()
        .or_else(|_| s.parse().map(BigRational::from_integer))
        .map_err(|_| Failure::Usage(format!("--q expects a rational, got `{s}`")))?;
    if !q.is_positive() {
        return Err(Failure::Usage("--q must be positive".into()));
    }
    Ok(Some(q))
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    if cli.jobs > MAX_JOBS {
        return Err(Failure::Usage(format!("--jobs is capped at {MAX_JOBS}")));
    }
    if cli.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
            .map_err(|e| Failure::Invariant(e.to_string()))?;
    }
    let q = parse_q(&cli.q)?;
    let datum = load_datum(&cli.datum)?;
    let cache = cli.cache_dir.as_ref().map(|dir| RowCache::new(dir, &datum));
    let hecke = HeckeAlgebra::new(datum);
    let ctx = Ctx {
        hecke: &hecke,
        format: cli.format,
        q,
        cache,
    };
    let cw = |s: &str| -> CliResult<Coweight> {
        let c = Coweight::parse(s)?;
        hecke.datum().check(&c)?;
        Ok(c)
    };
    match &cli.command {
        Command::Tensor { lambda, mu } => ctx.tensor(&cw(lambda)?, &cw(mu)?).map(Outcome::ok),
        Command::Weights { lambda } => ctx.weights(&cw(lambda)?).map(Outcome::ok),
        Command::Satake { lambda } => ctx.satake(&cw(lambda)?).map(Outcome::ok),
        Command::HeckeMul { lhs, rhs, basis } => ctx.hecke_mul(lhs, rhs, *basis).map(Outcome::ok),
        Command::WhittakerEval {
            gamma,
            max_level,
            coord_bound,
        } => ctx
            .whittaker_eval(&TorusPoint::parse(gamma)?, *max_level, *coord_bound)
            .map(Outcome::ok),
        Command::Predict { lambda, mu, nu } => ctx
            .predict(&cw(lambda)?, &cw(mu)?, &cw(nu)?)
            .map(Outcome::ok),
        Command::Strata { bound } => ctx.strata(*bound).map(Outcome::ok),
        Command::VerifyCs { cutoff, gammas } => ctx.verify_cs(*cutoff, *gammas),
        Command::VerifyEq2 { m_max, primes } => ctx.verify_eq2(*m_max, primes),
    }
}

/// On-disk memo of base-change rows, one JSON file per highest weight.
struct RowCache {
    dir: PathBuf,
}

impl RowCache {
    fn new(root: &Path, datum: &RootDatum) -> Self {
        let mut h = DefaultHasher::new();
        datum.simple_coroots().hash(&mut h);
        datum.simple_roots().hash(&mut h);
        let tag = match datum.preset_name() {
            Some(name) => name.to_string(),
            None => format!("custom-{:016x}", h.finish()),
        };
        RowCache {
            dir: root.join(tag),
        }
    }

    fn path(&self, lambda: &Coweight) -> PathBuf {
        self.dir.join(format!("satake_{}.json", lambda.key()))
    }

    fn load(&self, lambda: &Coweight) -> Option<SatakeRow> {
        let text = std::fs::read_to_string(self.path(lambda)).ok()?;
        let v: Value = serde_json::from_str(&text).ok()?;
        let mut row = SatakeRow::new();
        for (k, p) in v.as_object()? {
            row.insert(Coweight::parse(k).ok()?, LaurentPoly::from_json(p).ok()?);
        }
        Some(row)
    }

    fn store(&self, lambda: &Coweight, row: &SatakeRow) {
        let obj: Map<String, Value> = row.iter().map(|(k, p)| (k.key(), p.to_json())).collect();
        let write = std::fs::create_dir_all(&self.dir).and_then(|_| {
            std::fs::write(
                self.path(lambda),
                serde_json::to_string(&obj).expect("json"),
            )
        });
        if let Err(e) = write {
            eprintln!("warning: could not write base-change cache: {e}");
        }
    }
}

struct Ctx<'a> {
    hecke: &'a HeckeAlgebra,
    format: Format,
    q: Option<BigRational>,
    cache: Option<RowCache>,
}

fn to_json_text(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("json");
    s.push('\n');
    s
}

fn rational_str(x: &BigRational) -> String {
    x.to_string()
}

impl Ctx<'_> {
    /// Makes sure the base-change rows for `lambdas` come from or go to the cache.
    fn warm_rows<'c>(&self, lambdas: impl IntoIterator<Item = &'c Coweight>) -> CliResult<()> {
        let Some(cache) = &self.cache else {
            return Ok(());
        };
        for l in lambdas {
            match cache.load(l) {
                Some(row) => self.hecke.insert_satake_row(l.clone(), row),
                None => cache.store(l, self.hecke.satake_row(l)?.as_ref()),
            }
        }
        Ok(())
    }

    /// A polynomial in `v`, or its value at `v² = q` if `--q` was given.
    fn poly_str(&self, p: &LaurentPoly) -> CliResult<String> {
        let Some(q) = &self.q else {
            return Ok(p.to_string());
        };
        let (a, b) = p.eval_sqrt_q(q)?;
        Ok(if b.is_zero() {
            rational_str(&a)
        } else if a.is_zero() {
            format!("{}*sqrt({})", rational_str(&b), rational_str(q))
        } else {
            format!(
                "{} + {}*sqrt({})",
                rational_str(&a),
                rational_str(&b),
                rational_str(q)
            )
        })
    }

    fn pretty_note(&self) -> &'static str {
        if self.q.is_some() {
            ""
        } else {
            "(q = v^2)\n"
        }
    }

    fn tensor(&self, lambda: &Coweight, mu: &Coweight) -> CliResult<String> {
        let dec = self.hecke.ring().tensor_decompose(lambda, mu)?;
        Ok(match self.format {
            Format::Json => {
                let obj: Map<String, Value> =
                    dec.iter().map(|(nu, &c)| (nu.key(), json!(c))).collect();
                to_json_text(&Value::Object(obj))
            }
            Format::Csv => {
                let mut s = String::from("nu,multiplicity\n");
                for (nu, c) in dec.iter() {
                    writeln!(s, "\"{}\",{c}", nu.key()).unwrap();
                }
                s
            }
            Format::Pretty => {
                let parts: Vec<String> = dec
                    .iter()
                    .map(|(nu, &c)| {
                        if c == 1 {
                            format!("V{nu}")
                        } else {
                            format!("{c} V{nu}")
                        }
                    })
                    .collect();
                format!("V{lambda} x V{mu} = {}\n", parts.join(" + "))
            }
        })
    }

    fn weights(&self, lambda: &Coweight) -> CliResult<String> {
        let table = self.hecke.ring().weight_table(lambda)?;
        Ok(match self.format {
            Format::Json => {
                let w: Map<String, Value> = table
                    .weights()
                    .iter()
                    .map(|(nu, &m)| (nu.key(), json!(m)))
                    .collect();
                to_json_text(&json!({
                    "highest": lambda.key(),
                    "dimension": table.dimension(),
                    "weights": w,
                }))
            }
            Format::Csv => {
                let mut s = String::from("weight,multiplicity\n");
                for (nu, m) in table.weights() {
                    writeln!(s, "\"{}\",{m}", nu.key()).unwrap();
                }
                s
            }
            Format::Pretty => {
                let mut s = format!("V{lambda}: dimension {}\n", table.dimension());
                for (nu, m) in table.weights() {
                    writeln!(s, "  {nu}  x{m}").unwrap();
                }
                s
            }
        })
    }

    fn satake(&self, lambda: &Coweight) -> CliResult<String> {
        self.hecke.datum().require_dominant(lambda)?;
        self.warm_rows([lambda])?;
        let row = self.hecke.satake_row(lambda)?;
        let expansion = self.hecke.a_in_c(lambda)?;
        Ok(match self.format {
            Format::Json => {
                let mut p = Map::new();
                for (mu, poly) in row.iter() {
                    p.insert(mu.key(), json!(self.poly_str(poly)?));
                }
                let mut obj = json!({ "lambda": lambda.key(), "p": p });
                if self.q.is_none() {
                    obj["a_in_c"] = expansion.to_json();
                }
                to_json_text(&obj)
            }
            Format::Csv => {
                let mut s = String::from("mu,p\n");
                for (mu, poly) in row.iter() {
                    writeln!(s, "\"{}\",{}", mu.key(), self.poly_str(poly)?).unwrap();
                }
                s
            }
            Format::Pretty => {
                let mut s = String::from(self.pretty_note());
                for (mu, poly) in row.iter() {
                    writeln!(s, "p[{lambda},{mu}] = {}", self.poly_str(poly)?).unwrap();
                }
                if self.q.is_none() {
                    writeln!(s, "A{lambda} = {expansion}").unwrap();
                }
                s
            }
        })
    }

    fn operand(&self, s: &str, basis: Basis) -> CliResult<BasisElement> {
        let s = s.trim();
        let from_json = |text: &str| -> CliResult<BasisElement> {
            let v: Value = serde_json::from_str(text).map_err(Error::from)?;
            Ok(BasisElement::from_json(&v)?)
        };
        let e = if let Some(path) = s.strip_prefix('@') {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
            from_json(&text)?
        } else if s.starts_with('{') {
            from_json(s)?
        } else {
            let c = Coweight::parse(s)?;
            self.hecke.datum().require_dominant(&c)?;
            BasisElement::basis_vector(basis, c)
        };
        for l in e.terms().keys() {
            self.hecke.datum().check(l)?;
        }
        self.hecke.validate(&e)?;
        Ok(e)
    }

    fn hecke_mul(&self, lhs: &str, rhs: &str, basis: BasisArg) -> CliResult<String> {
        let basis = match basis {
            BasisArg::A => Basis::A,
            BasisArg::C => Basis::C,
        };
        let (x, y) = (self.operand(lhs, basis)?, self.operand(rhs, basis)?);
        if x.basis() != y.basis() {
            return Err(Failure::Usage(format!(
                "operands are in different bases ({} and {})",
                x.basis(),
                y.basis()
            )));
        }
        let prod = match x.basis() {
            Basis::A => self.hecke.mul(&x, &y)?,
            Basis::C => {
                let ring = self.hecke.ring();
                let below: Vec<Coweight> = x
                    .terms()
                    .keys()
                    .chain(y.terms().keys())
                    .flat_map(|l| ring.dominant_weights_below(l))
                    .collect();
                self.warm_rows(&below)?;
                self.hecke.c_mul(&x, &y)?
            }
            Basis::Phi => {
                return Err(Failure::Usage(
                    "Whittaker elements are not Hecke algebra elements".into(),
                ))
            }
        };
        Ok(match self.format {
            Format::Json if self.q.is_none() => to_json_text(&prod.to_json()),
            Format::Json => {
                let terms: Vec<Value> = prod
                    .terms()
                    .iter()
                    .map(|(l, c)| Ok(json!({ "coweight": l, "value": self.poly_str(c)? })))
                    .collect::<CliResult<_>>()?;
                to_json_text(&json!({ "basis": prod.basis(), "terms": terms }))
            }
            Format::Csv => {
                let mut s = String::from("coweight,coeff\n");
                for (l, c) in prod.terms() {
                    writeln!(s, "\"{}\",{}", l.key(), self.poly_str(c)?).unwrap();
                }
                s
            }
            Format::Pretty if self.q.is_none() => format!("{}{prod}\n", self.pretty_note()),
            Format::Pretty => {
                let mut s = String::new();
                for (l, c) in prod.terms() {
                    writeln!(s, "{} {l}: {}", prod.basis(), self.poly_str(c)?).unwrap();
                }
                s
            }
        })
    }

    fn whittaker_eval(
        &self,
        gamma: &TorusPoint,
        max_level: i64,
        coord_bound: Option<i64>,
    ) -> CliResult<String> {
        let w = WhittakerModule::new(self.hecke);
        let rows = w.value_table(gamma, max_level, coord_bound)?;
        Ok(match self.format {
            Format::Json => {
                let mut out = Vec::new();
                for r in &rows {
                    let mut obj = serde_json::to_value(r).map_err(Error::from)?;
                    if let Some(q) = &self.q {
                        let (a, b) = LaurentPoly::v_pow(r.v_power).eval_sqrt_q(q)?;
                        obj["value_at_q"] = json!(rational_str(&(&a * &r.value)));
                        if !b.is_zero() {
                            obj["value_at_q_sqrt_part"] = json!(rational_str(&(&b * &r.value)));
                        }
                    }
                    out.push(obj);
                }
                to_json_text(&Value::Array(out))
            }
            Format::Csv => value_table_csv(&rows),
            Format::Pretty => {
                let mut s = String::from(self.pretty_note());
                for r in &rows {
                    let vp = self.poly_str(&LaurentPoly::v_pow(r.v_power))?;
                    if self.q.is_some() {
                        writeln!(s, "W({}) = {} * {vp}", r.lambda, r.value).unwrap();
                    } else {
                        writeln!(s, "W({}) = {} v^{}", r.lambda, r.value, r.v_power).unwrap();
                    }
                }
                s
            }
        })
    }

    fn predict(&self, lambda: &Coweight, mu: &Coweight, nu: &Coweight) -> CliResult<String> {
        let p = grassmannian::predicted_cohomology(self.hecke.ring(), lambda, mu, nu)?;
        if let (Some(k), Some(f)) = (p.k, p.frob) {
            if k != f {
                return Err(Failure::Invariant(format!(
                    "degree {k} != Frobenius weight {f}"
                )));
            }
        }
        Ok(match self.format {
            Format::Json => to_json_text(&serde_json::to_value(&p).map_err(Error::from)?),
            Format::Csv => grassmannian::predictions_csv(&[(
                lambda.clone(),
                mu.clone(),
                nu.clone(),
                p.clone(),
            )]),
            Format::Pretty => pretty_prediction(lambda, mu, nu, &p),
        })
    }

    fn strata(&self, bound: i64) -> CliResult<String> {
        if bound < 0 {
            return Err(Failure::Usage("bound must be nonnegative".into()));
        }
        let s = grassmannian::drinfeld_strata(self.hecke.datum(), bound);
        Ok(match self.format {
            Format::Json => to_json_text(&serde_json::to_value(&s).map_err(Error::from)?),
            Format::Csv => {
                let mut out = String::from("gamma,codim\n");
                for x in &s {
                    writeln!(out, "\"{}\",{}", x.gamma.key(), x.codim).unwrap();
                }
                out
            }
            Format::Pretty => {
                let mut out = String::new();
                for x in &s {
                    writeln!(out, "gamma = {}  codim {}", x.gamma, x.codim).unwrap();
                }
                out
            }
        })
    }

    fn verify_cs(&self, cutoff: i64, n_gammas: usize) -> CliResult<Outcome> {
        if cutoff < 0 {
            return Err(Failure::Usage("cutoff must be nonnegative".into()));
        }
        let w = WhittakerModule::new(self.hecke);
        let gammas = sample_gammas(self.hecke.datum().lattice_rank(), n_gammas);
        let report = w.verify_cs(cutoff, &gammas)?;
        let status = if report.passed() { "PASS" } else { "FAIL" };
        let text = match self.format {
            Format::Json => to_json_text(&serde_json::to_value(&report).map_err(Error::from)?),
            Format::Csv => {
                let mut s = String::from("kind,count\n");
                writeln!(s, "transform,{}", report.transform_checks).unwrap();
                writeln!(s, "module,{}", report.module_checks).unwrap();
                writeln!(s, "eigen,{}", report.eigen_checks).unwrap();
                writeln!(s, "failures,{}", report.failures.len()).unwrap();
                s
            }
            Format::Pretty => {
                let mut s = format!(
                    "{status} {}/{} (transform {}, module {}, eigen {})\n",
                    report.total() - report.failures.len(),
                    report.total(),
                    report.transform_checks,
                    report.module_checks,
                    report.eigen_checks
                );
                for f in &report.failures {
                    writeln!(s, "  {f}").unwrap();
                }
                s
            }
        };
        if self.format != Format::Pretty {
            eprintln!(
                "{status} {} checks, {} failures",
                report.total(),
                report.failures.len()
            );
        }
        Ok(Outcome {
            text,
            verification_failed: !report.passed(),
        })
    }

    fn verify_eq2(&self, m_max: i64, primes: &[u64]) -> CliResult<Outcome> {
        if m_max < 0 {
            return Err(Failure::Usage("m_max must be nonnegative".into()));
        }
        let oracle = Rank1Oracle::new(self.hecke)?;
        let report = oracle.verify_eq2(m_max, primes)?;
        let summary = format!(
            "{} {}/{}",
            if report.all_pass() { "PASS" } else { "FAIL" },
            report.passed(),
            report.total()
        );
        let text = match self.format {
            Format::Json => {
                to_json_text(&serde_json::to_value(&report.entries).map_err(Error::from)?)
            }
            Format::Csv => {
                let mut s = String::from("lambda,mu,nu,q,lhs,rhs,lhs_closed_form,pass\n");
                for e in &report.entries {
                    writeln!(
                        s,
                        "{},{},{},{},\"{}\",\"{}\",\"{}\",{}",
                        e.lambda, e.mu, e.nu, e.q, e.lhs, e.rhs, e.lhs_closed_form, e.pass
                    )
                    .unwrap();
                }
                s
            }
            Format::Pretty => {
                let mut s = format!("{summary}\n");
                for e in report.failures() {
                    writeln!(
                        s,
                        "  (lambda, mu, nu) = ({}, {}, {}), q = {}: lhs {} | closed form {} | rhs {}",
                        e.lambda, e.mu, e.nu, e.q, e.lhs, e.lhs_closed_form, e.rhs
                    )
                    .unwrap();
                }
                s
            }
        };
        if self.format != Format::Pretty {
            eprintln!("{summary}");
        }
        Ok(Outcome {
            text,
            verification_failed: !report.all_pass(),
        })
    }
}

fn pretty_prediction(l: &Coweight, m: &Coweight, n: &Coweight, p: &CohomologyPrediction) -> String {
    match (p.vanishes, p.k, p.frob) {
        (false, Some(k), Some(f)) => format!(
            "(lambda, mu, nu) = ({l}, {m}, {n}): dimension {} in degree {k}, Frobenius weight q^{f}\n",
            p.dim
        ),
        _ => format!("(lambda, mu, nu) = ({l}, {m}, {n}): vanishes\n"),
    }
}
