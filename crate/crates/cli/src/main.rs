mod formats;
mod report;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use mtv_core::generators::catalogue;
use mtv_core::limits::{DEFAULT_MAX_FACES, DEFAULT_MAX_TUPLES};
use mtv_core::{
    betti_reduced, boundary_matrix, chessboard, choose_prime, conjecture_scan, dold_inequality, find_tverberg,
    homologically_connected, hulls_intersect, is_action_free_on, matroid_deleted_join, max_affine_t,
    max_disjoint_bases, pack_k_bases, target_t, verify_claim, verify_corollary, verify_matroid_connectivity,
    verify_theorem, Error, FaceSet, Limits, Matroid, PointConfig, SimplicialComplex,
};
use serde::Serialize;
use serde_json::{json, Value};

use formats::{builtin, parse_sets, MatroidFile};
use report::{error_payload, InputDigest, Outcome, RunReport};

#[derive(Parser)]
#[command(name = "mtv", version, about = "Matroid base packing, deleted-join connectivity and Tverberg witnesses")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Global {
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Seed for generated point configurations.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Cap on faces materialized in one dimension.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_FACES)]
    max_faces: usize,
    /// Cap on tuples examined by a witness search.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_TUPLES)]
    max_tuples: u64,
    #[arg(long, global = true)]
    time_limit_s: Option<f64>,
    /// Add wall time to the report. Reports are then no longer reproducible.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Args, Serialize, Clone)]
#[serde(rename_all = "kebab-case")]
struct MatroidArg {
    /// `.matroid` file.
    #[arg(long)]
    matroid: Option<PathBuf>,
    /// Built-in matroid: `uniform:R,N`, `complete:V` or `colourful:R,D`.
    #[arg(long, conflicts_with = "matroid")]
    builtin: Option<String>,
}

#[derive(Args, Serialize, Clone)]
#[serde(rename_all = "kebab-case")]
struct PointsArg {
    /// `.pts` file.
    #[arg(long)]
    points: Option<PathBuf>,
    /// Generate seeded random points in this dimension instead.
    #[arg(long, conflicts_with = "points")]
    random_points: Option<usize>,
}

#[derive(Subcommand, Serialize)]
#[serde(untagged, rename_all_fields = "kebab-case")]
enum Command {
    /// Rank of a set (default: the ground set).
    Rank {
        #[command(flatten)]
        #[serde(flatten)]
        m: MatroidArg,
        /// Comma-separated element ids.
        #[arg(long)]
        set: Option<String>,
    },
    /// Maximum number of disjoint bases, a packing and a certificate.
    Bases {
        #[command(flatten)]
        #[serde(flatten)]
        m: MatroidArg,
    },
    /// Pack k disjoint bases or certify that none exist.
    Pack {
        #[command(flatten)]
        #[serde(flatten)]
        m: MatroidArg,
        #[arg(long)]
        k: usize,
    },
    /// Face counts of the k-fold deleted join of a matroid complex.
    Complex {
        #[command(flatten)]
        #[serde(flatten)]
        m: MatroidArg,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        max_dim: Option<isize>,
        /// Write the faces to this `.faces` file.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Face counts of the chessboard complex C(k, m).
    Chessboard {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        max_dim: Option<isize>,
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Reduced rational Betti numbers, optionally checked against a bound.
    Homology {
        #[command(flatten)]
        #[serde(flatten)]
        m: MatroidArg,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// `k,m` for C(k, m).
        #[arg(long)]
        chessboard: Option<String>,
        /// `.faces` file.
        #[arg(long)]
        faces: Option<PathBuf>,
        #[arg(long)]
        up_to: Option<usize>,
        /// Check homological c-connectivity.
        #[arg(long, allow_hyphen_values = true)]
        connected: Option<isize>,
        /// Directory for boundary matrices in triplet format.
        #[arg(long)]
        export_boundary: Option<PathBuf>,
    },
    /// Connectivity of (M₁ ∗ ⋯ ∗ M_k)_Δ from sets covered by m independent sets each.
    VerifyClaim {
        /// One `.matroid` file per set, or a single file used for every set.
        #[arg(long = "matroid")]
        matroids: Vec<PathBuf>,
        #[arg(long = "builtin")]
        builtins: Vec<String>,
        /// Sets `A_i` as `0,1;2,3`.
        #[arg(long)]
        sets: String,
        #[arg(long)]
        m: usize,
    },
    /// Connectivity of M^{∗k}_Δ from the disjoint base count.
    VerifyCorollary {
        #[command(flatten)]
        #[serde(flatten)]
        m: MatroidArg,
        #[arg(long)]
        k: usize,
    },
    /// Homological (rank − 2)-connectivity of the independence complex.
    VerifyMatroidConn {
        #[command(flatten)]
        #[serde(flatten)]
        m: MatroidArg,
    },
    /// Whether M^{∗k}_Δ is homologically (k·rank − 2)-connected.
    ConjectureScan {
        #[command(flatten)]
        #[serde(flatten)]
        m: MatroidArg,
        #[arg(long)]
        k: usize,
        /// Scan the built-in small-matroid catalogue instead.
        #[arg(long)]
        catalogue: bool,
    },
    /// Whether the convex hulls of point subsets meet.
    Hulls {
        #[command(flatten)]
        #[serde(flatten)]
        p: PointsArg,
        /// Element sets as `0,1;2,3`.
        #[arg(long)]
        sets: String,
    },
    /// Search for t disjoint independent sets with intersecting hulls.
    Tverberg {
        #[command(flatten)]
        #[serde(flatten)]
        m: MatroidArg,
        #[command(flatten)]
        #[serde(flatten)]
        p: PointsArg,
        #[arg(long, required_unless_present = "max_t")]
        t: Option<usize>,
        /// Find the largest t up to this cap.
        #[arg(long, conflicts_with = "t")]
        max_t: Option<usize>,
    },
    /// b(M), t* = ⌈√b/4⌉, the prime choice and a witness search at t*.
    VerifyTheorem {
        #[command(flatten)]
        #[serde(flatten)]
        m: MatroidArg,
        #[command(flatten)]
        #[serde(flatten)]
        p: PointsArg,
    },
    /// Largest prime p with √b/4 ≤ p ≤ √b/2.
    Prime {
        #[arg(long)]
        b: u64,
    },
    /// The prime-choice inequality for b, d and p.
    Inequality {
        #[arg(long)]
        b: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        p: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Rank { .. } => "rank",
            Command::Bases { .. } => "bases",
            Command::Pack { .. } => "pack",
            Command::Complex { .. } => "complex",
            Command::Chessboard { .. } => "chessboard",
            Command::Homology { .. } => "homology",
            Command::VerifyClaim { .. } => "verify-claim",
            Command::VerifyCorollary { .. } => "verify-corollary",
            Command::VerifyMatroidConn { .. } => "verify-matroid-conn",
            Command::ConjectureScan { .. } => "conjecture-scan",
            Command::Hulls { .. } => "hulls",
            Command::Tverberg { .. } => "tverberg",
            Command::VerifyTheorem { .. } => "verify-theorem",
            Command::Prime { .. } => "prime",
            Command::Inequality { .. } => "inequality",
        }
    }
}

enum Failure {
    Input(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure::Input(e)
    }
}

type Outcomes = Result<(Outcome, Value), Failure>;

struct Ctx {
    limits: Limits,
    seed: u64,
    digest: InputDigest,
}

impl Ctx {
    fn read(&mut self, path: &Path) -> Result<String, Failure> {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        self.digest.add(&text);
        Ok(text)
    }

    fn matroid_from(&mut self, file: Option<&Path>, name: Option<&str>) -> Result<Option<Matroid>, Failure> {
        match (file, name) {
            (Some(path), _) => {
                let text = self.read(path)?;
                Ok(Some(MatroidFile::parse(&text)?.into_matroid()?))
            }
            (None, Some(name)) => {
                self.digest.add(name);
                Ok(Some(builtin(name)?))
            }
            (None, None) => Ok(None),
        }
    }

    fn matroid(&mut self, arg: &MatroidArg) -> Result<Matroid, Failure> {
        self.matroid_from(arg.matroid.as_deref(), arg.builtin.as_deref())?
            .ok_or_else(|| Failure::Input("one of --matroid or --builtin is required".into()))
    }

    fn points(&mut self, arg: &PointsArg, n: usize) -> Result<PointConfig, Failure> {
        match (&arg.points, arg.random_points) {
            (Some(path), _) => {
                let text = self.read(path)?;
                Ok(PointConfig::parse(&text)?)
            }
            (None, Some(d)) => {
                let cfg = PointConfig::random(n, d, self.seed)?;
                self.digest.add(&cfg.to_text());
                Ok(cfg)
            }
            (None, None) => Err(Failure::Input("one of --points or --random-points is required".into())),
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("payloads serialize")
}

fn parse_ids(s: &str) -> Result<FaceSet, Failure> {
    let mut sets = parse_sets(s)?;
    if sets.len() != 1 {
        return Err(Failure::Input(format!("expected one comma-separated set, got {s:?}")));
    }
    Ok(sets.remove(0))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn matroid_dump(m: &Matroid) -> Value {
    serde_json::to_value(MatroidFile::from_spec(m.spec())).expect("matroid files serialize")
}

fn complex_summary(x: &SimplicialComplex) -> Value {
    json!({
        "f-vector": x.f_vector(),
        "materialized-dim": x.materialized_dim(),
        "dim-bound": x.dim_bound(),
        "truncated": x.is_truncated(),
    })
}

fn join_of(m: &Matroid, k: usize, max_dim: isize, limits: &Limits) -> Result<SimplicialComplex, Error> {
    if k == 1 {
        m.as_complex(max_dim, limits)
    } else {
        matroid_deleted_join(&vec![m; k], max_dim, limits)
    }
}

fn execute(cmd: &Command, ctx: &mut Ctx) -> Outcomes {
    let limits = ctx.limits;
    match cmd {
        Command::Rank { m, set } => {
            let mat = ctx.matroid(m)?;
            let set = match set {
                Some(s) => parse_ids(s)?,
                None => mat.ground(),
            };
            Ok((
                Outcome::Verified,
                json!({
                    "ground-size": mat.ground_size(),
                    "set": set,
                    "rank": mat.rank(&set)?,
                    "independent": mat.is_independent(&set)?,
                    "full-rank": mat.full_rank(),
                    "loops": mat.loops(),
                }),
            ))
        }
        Command::Bases { m } => {
            let mat = ctx.matroid(m)?;
            Ok((Outcome::Verified, to_value(&max_disjoint_bases(&mat))))
        }
        Command::Pack { m, k } => {
            let mat = ctx.matroid(m)?;
            Ok((Outcome::Verified, to_value(&pack_k_bases(&mat, *k)?)))
        }
        Command::Complex { m, k, max_dim, export } => {
            let mat = ctx.matroid(m)?;
            if *k == 0 {
                return Err(Failure::Input("k must be positive".into()));
            }
            let dim = max_dim.unwrap_or((k * mat.full_rank()) as isize - 1);
            let x = join_of(&mat, *k, dim, &limits)?;
            if let Some(path) = export {
                write_file(path, &x.to_faces_text())?;
            }
            let mut payload = complex_summary(&x);
            if *k > 1 {
                payload["action-free"] = json!(is_action_free_on(&x)?);
            }
            Ok((Outcome::Verified, payload))
        }
        Command::Chessboard { k, m, max_dim, export } => {
            let x = chessboard(*k, *m, *max_dim, &limits)?;
            if let Some(path) = export {
                write_file(path, &x.to_faces_text())?;
            }
            Ok((Outcome::Verified, complex_summary(&x)))
        }
        Command::Homology {
            m,
            k,
            chessboard: board,
            faces,
            up_to,
            connected,
            export_boundary,
        } => {
            let want = up_to.map(|u| u as isize).or(*connected).unwrap_or(0).max(0);
            let mat = ctx.matroid_from(m.matroid.as_deref(), m.builtin.as_deref())?;
            let x = match (mat, board, faces) {
                (Some(mat), None, None) => join_of(&mat, (*k).max(1), want + 1, &limits)?,
                (None, Some(spec), None) => {
                    ctx.digest.add(spec);
                    let dims: Vec<usize> = spec
                        .split(',')
                        .map(|s| s.trim().parse().map_err(|_| format!("bad chessboard {spec:?}")))
                        .collect::<Result<_, _>>()?;
                    let [bk, bm] = dims[..] else {
                        return Err(Failure::Input(format!("bad chessboard {spec:?}, expected k,m")));
                    };
                    chessboard(bk, bm, Some(want + 1), &limits)?
                }
                (None, None, Some(path)) => {
                    let text = ctx.read(path)?;
                    SimplicialComplex::from_faces_text(&text, &limits)?
                }
                _ => {
                    return Err(Failure::Input(
                        "give exactly one of --matroid/--builtin, --chessboard or --faces".into(),
                    ))
                }
            };
            let top = up_to.unwrap_or_else(|| x.materialized_dim().max(0) as usize);
            if let Some(dir) = export_boundary {
                fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
                for d in 0..=top + 1 {
                    if x.is_materialized_through(d as isize) {
                        write_file(&dir.join(format!("boundary_{d}.txt")), &boundary_matrix(&x, d)?.to_triplets())?;
                    }
                }
            }
            let betti = betti_reduced(&x, top)?;
            let mut payload = json!({ "betti": betti, "f-vector": x.f_vector() });
            let mut outcome = Outcome::Verified;
            if let Some(c) = connected {
                let r = homologically_connected(&x, *c)?;
                if !r.verified {
                    outcome = Outcome::PropertyViolated;
                }
                payload["connectivity"] = to_value(&r);
            }
            Ok((outcome, payload))
        }
        Command::VerifyClaim {
            matroids,
            builtins,
            sets,
            m,
        } => {
            let sets = parse_sets(sets)?;
            let mut ms = Vec::new();
            for path in matroids {
                ms.extend(ctx.matroid_from(Some(path), None)?);
            }
            for name in builtins {
                ms.extend(ctx.matroid_from(None, Some(name))?);
            }
            ctx.digest.add(&format!("{sets:?}"));
            if ms.len() == 1 && sets.len() > 1 {
                ms = vec![ms[0].clone(); sets.len()];
            }
            let r = verify_claim(&ms, &sets, *m, &limits)?;
            if r.connectivity.verified {
                Ok((Outcome::Verified, to_value(&r)))
            } else {
                Ok((
                    Outcome::FalsificationCandidate,
                    json!({
                        "report": r,
                        "inputs": { "matroids": ms.iter().map(matroid_dump).collect::<Vec<_>>(), "sets": sets, "m": m },
                    }),
                ))
            }
        }
        Command::VerifyCorollary { m, k } => {
            let mat = ctx.matroid(m)?;
            let r = verify_corollary(&mat, *k, &limits)?;
            if r.connectivity.verified {
                Ok((Outcome::Verified, to_value(&r)))
            } else {
                Ok((
                    Outcome::FalsificationCandidate,
                    json!({ "report": r, "inputs": { "matroid": matroid_dump(&mat), "k": k } }),
                ))
            }
        }
        Command::VerifyMatroidConn { m } => {
            let mat = ctx.matroid(m)?;
            let r = verify_matroid_connectivity(&mat, &limits)?;
            if r.verified {
                Ok((Outcome::Verified, to_value(&r)))
            } else {
                Ok((
                    Outcome::FalsificationCandidate,
                    json!({ "report": r, "inputs": { "matroid": matroid_dump(&mat) } }),
                ))
            }
        }
        Command::ConjectureScan { m, k, catalogue: batch } => {
            if *batch {
                ctx.digest.add("catalogue");
                let mut records = Vec::new();
                for inst in catalogue() {
                    match conjecture_scan(&inst.matroid, *k, &limits) {
                        Ok(r) => records.push(json!({
                            "name": inst.name, "b": r.b, "rank": r.rank, "target": r.target,
                            "verdict": r.verdict, "first-nonvanishing": r.first_nonvanishing,
                        })),
                        Err(Error::ResourceLimit { what, .. }) => {
                            records.push(json!({ "name": inst.name, "skipped": what }))
                        }
                        Err(e) => return Err(e.into()),
                    }
                }
                return Ok((Outcome::Verified, json!({ "k": k, "records": records })));
            }
            let mat = ctx.matroid(m)?;
            let r = conjecture_scan(&mat, *k, &limits)?;
            let outcome = if r.verdict { Outcome::Verified } else { Outcome::PropertyViolated };
            Ok((outcome, to_value(&r)))
        }
        Command::Hulls { p, sets } => {
            let sets = parse_sets(sets)?;
            let n = sets.iter().filter_map(FaceSet::max_element).max().map_or(0, |e| e + 1);
            let cfg = ctx.points(p, n)?;
            ctx.digest.add(&format!("{sets:?}"));
            let coords = sets
                .iter()
                .map(|s| {
                    s.iter()
                        .map(|e| {
                            cfg.point(e)
                                .map(<[_]>::to_vec)
                                .ok_or_else(|| Failure::Input(format!("element {e} has no point")))
                        })
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            match hulls_intersect(&coords)? {
                Some(h) => Ok((
                    Outcome::WitnessFound,
                    json!({
                        "intersect": true,
                        "point": h.point.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
                        "coefficients": h.coefficients.iter()
                            .map(|c| c.iter().map(|q| q.to_string()).collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                    }),
                )),
                None => Ok((Outcome::Verified, json!({ "intersect": false }))),
            }
        }
        Command::Tverberg { m, p, t, max_t } => {
            let mat = ctx.matroid(m)?;
            let cfg = ctx.points(p, mat.ground_size())?;
            if let Some(cap) = max_t {
                let r = max_affine_t(&mat, &cfg, *cap, &limits)?;
                let outcome = if r.witness.is_some() { Outcome::WitnessFound } else { Outcome::PropertyViolated };
                return Ok((outcome, to_value(&r)));
            }
            let t = t.expect("clap requires --t or --max-t");
            let r = find_tverberg(&mat, &cfg, t, &limits)?;
            let outcome = if r.witness.is_some() { Outcome::WitnessFound } else { Outcome::PropertyViolated };
            Ok((outcome, to_value(&r)))
        }
        Command::VerifyTheorem { m, p } => {
            let mat = ctx.matroid(m)?;
            let cfg = ctx.points(p, mat.ground_size())?;
            let r = verify_theorem(&mat, &cfg, &limits)?;
            if r.witness.is_some() {
                Ok((Outcome::WitnessFound, to_value(&r)))
            } else {
                Ok((
                    Outcome::FalsificationCandidate,
                    json!({
                        "report": r,
                        "inputs": { "matroid": matroid_dump(&mat), "points": cfg.to_text() },
                    }),
                ))
            }
        }
        Command::Prime { b } => Ok((
            Outcome::Verified,
            json!({ "b": b, "prime": choose_prime(*b), "target-t": target_t(*b) }),
        )),
        Command::Inequality { b, d, p } => {
            let r = dold_inequality(*b, *d, *p)?;
            let outcome = if r.holds {
                Outcome::Verified
            } else if choose_prime(*b) == Some(*p) {
                Outcome::FalsificationCandidate
            } else {
                Outcome::PropertyViolated
            };
            Ok((outcome, to_value(&r)))
        }
    }
}

fn parameters(cli: &Cli) -> BTreeMap<String, Value> {
    let mut params: BTreeMap<String, Value> = match to_value(&cli.command) {
        Value::Object(map) => map.into_iter().filter(|(_, v)| !v.is_null()).collect(),
        _ => BTreeMap::new(),
    };
    params.insert("seed".into(), json!(cli.global.seed));
    params.insert("max-faces".into(), json!(cli.global.max_faces));
    params.insert("max-tuples".into(), json!(cli.global.max_tuples));
    if let Some(t) = cli.global.time_limit_s {
        params.insert("time-limit-s".into(), json!(t));
    }
    params
}

fn run(cli: &Cli) -> RunReport {
    let start = Instant::now();
    let mut limits = Limits::default()
        .with_max_faces(cli.global.max_faces)
        .with_max_tuples(cli.global.max_tuples);
    let mut early = None;
    if let Some(t) = cli.global.time_limit_s {
        match Duration::try_from_secs_f64(t) {
            Ok(d) => limits = limits.with_time_limit(d),
            Err(_) => early = Some(format!("bad --time-limit-s {t}")),
        }
    }
    let mut ctx = Ctx {
        limits,
        seed: cli.global.seed,
        digest: InputDigest::default(),
    };
    let result = match early {
        Some(msg) => Err(Failure::Input(msg)),
        None => execute(&cli.command, &mut ctx),
    };
    let (outcome, payload) = match result {
        Ok(r) => r,
        Err(Failure::Input(msg)) => (Outcome::InputError, json!({ "error": msg })),
        Err(Failure::Lib(e)) => error_payload(&e),
    };
    let mut report = RunReport::new(cli.command.name(), ctx.digest.finish(), parameters(cli), outcome, payload);
    if cli.global.timing {
        report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    report
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.global.threads == 0 {
        eprintln!("error: --threads must be at least 1");
        return ExitCode::from(2);
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.global.threads).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = pool.install(|| run(&cli));
    match cli.global.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    ExitCode::from(report.outcome.exit_code())
}
