//! The `levikit` command line. Each subcommand prints one JSON document on
//! stdout. Exit codes: 0 success, 1 invalid input, 2 a verified property
//! failed.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::clifford::{
    character_table, extension_exists, induce, restrict, stabilizer_of_character, verify_abelian_lemma,
    verify_lemma_equivalence, verify_wreath_theorem, Character, PermGroup, Perm, SubgroupEmbedding,
};
use crate::io::{self, GroupJson, RootDatumJson};
use crate::isotypy::{check_duality, classify_steinberg, factor_isotypy, DEFAULT_STEINBERG_BOUND};
use crate::levi;
use crate::root_datum::{standard, Isogeny};
use crate::weyl::{fixed_points, order_from_type, relative_normalizers_report, Twist, WeylGroup};
use crate::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "levikit", version, about = "Root data, twisted Weyl groups and Clifford theory of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the root datum axioms.
    Validate { file: PathBuf },
    /// Emit a standard root datum, e.g. `A3` or `B2xT1`.
    Datum {
        label: String,
        #[arg(long, value_enum, default_value_t = IsogenyArg::Sc)]
        isogeny: IsogenyArg,
    },
    /// Weyl group orders and normalizers of parabolic subgroups.
    #[command(subcommand)]
    Weyl(WeylCommand),
    /// Classify a Steinberg endomorphism.
    #[command(subcommand)]
    Steinberg(SteinbergCommand),
    /// Fixed points W^F of a Steinberg twist, optionally with the relative
    /// normalizers of a subset I.
    Fixed {
        #[arg(long)]
        steinberg: PathBuf,
        #[arg(long = "I", value_parser = parse_subset)]
        subset: Option<Subset>,
    },
    /// Levi decompositions of twisted normalizers.
    #[command(subcommand)]
    Levi(LeviCommand),
    /// Isotypies and p-morphisms of root data.
    #[command(subcommand)]
    Isotypy(IsotypyCommand),
    /// Conjugacy classes and character tables of permutation groups.
    #[command(subcommand)]
    Group(GroupCommand),
    /// Restriction, induction and extension of characters.
    #[command(subcommand)]
    Clifford(CliffordCommand),
    /// Wreath products and the extension property of their base groups.
    #[command(subcommand)]
    Wreath(WreathCommand),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum IsogenyArg {
    Sc,
    Adj,
}

#[derive(Clone, Debug)]
struct Subset(Vec<usize>);

fn parse_subset(s: &str) -> std::result::Result<Subset, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Subset(vec![]));
    }
    s.split(',').map(|x| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"))).collect::<std::result::Result<_, _>>().map(Subset)
}

#[derive(Subcommand, Debug)]
enum WeylCommand {
    /// |W| by enumeration and by the degree product.
    Order { file: PathBuf },
    /// N_W(W_I) = W_I ⋊ N_W(I) for a subset I of the simple roots.
    Normalizer {
        file: PathBuf,
        #[arg(long = "I", value_parser = parse_subset)]
        subset: Subset,
    },
}

#[derive(Subcommand, Debug)]
enum SteinbergCommand {
    Classify {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_STEINBERG_BOUND)]
        bound: u32,
    },
}

#[derive(Subcommand, Debug)]
enum LeviCommand {
    /// Wreath decomposition of N_{W^F}(I). Uses the untwisted Weyl group of
    /// DATUM unless --steinberg is given.
    Decompose {
        datum: Option<PathBuf>,
        #[arg(long)]
        steinberg: Option<PathBuf>,
        #[arg(long = "I", value_parser = parse_subset)]
        subset: Subset,
    },
}

#[derive(Args, Debug)]
struct PArgs {
    file: PathBuf,
    #[arg(long)]
    p: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum IsotypyCommand {
    Classify(PArgs),
    Factor(PArgs),
    Dual(PArgs),
}

#[derive(Subcommand, Debug)]
enum GroupCommand {
    Classes { file: PathBuf },
    Table { file: PathBuf },
}

#[derive(Args, Debug)]
struct PairArgs {
    /// The overgroup.
    #[arg(long = "G")]
    g: PathBuf,
    /// The subgroup.
    #[arg(long = "N")]
    n: PathBuf,
    /// JSON list of 1-based images of the subgroup generators in G; the
    /// subgroup is taken as included in G when omitted.
    #[arg(long)]
    images: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum CliffordCommand {
    /// Restrict irreducibles of G to N.
    Restrict {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        chi: Option<usize>,
    },
    /// Induce irreducibles of N to G.
    Induce {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        theta: Option<usize>,
    },
    /// Stabilizer in G of an irreducible of N.
    Stabilizer {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        theta: usize,
    },
    /// Search for an extension of an irreducible of N to its stabilizer.
    Extend {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        theta: Option<usize>,
    },
    LemmaEquivalence {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        theta: Option<usize>,
    },
    LemmaAbelian {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        chi: Option<usize>,
    },
}

#[derive(Args, Debug)]
struct WreathArgs {
    #[arg(long = "H")]
    h: PathBuf,
    /// Group acting on H through its first deg(H) points; trivial if omitted.
    #[arg(long = "A")]
    a: Option<PathBuf>,
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum WreathCommand {
    /// Emit (H ⋊ A) ≀ S_n and its base group H^n.
    Build(WreathArgs),
    /// Check that every irreducible of H^n extends to its stabilizer.
    Verify(WreathArgs),
}

/// Outcome of a subcommand: the JSON document and whether every verified
/// property held.
struct Outcome {
    doc: Value,
    ok: bool,
    invalid: bool,
}

impl Outcome {
    fn ok(doc: Value) -> Self {
        Outcome { doc, ok: true, invalid: false }
    }

    fn checked(doc: Value, ok: bool) -> Self {
        Outcome { doc, ok, invalid: false }
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(out) => {
            emit(&out.doc);
            if out.invalid {
                1
            } else if out.ok {
                0
            } else {
                2
            }
        }
        Err(e) => {
            eprintln!("levikit: {e}");
            let falsified = e.is_falsification();
            emit(&json!({ "error": e.to_string(), "falsified": falsified }));
            if falsified {
                2
            } else {
                1
            }
        }
    }
}

fn emit(doc: &Value) {
    use std::io::Write;
    let text = serde_json::to_string_pretty(doc).expect("serializable");
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn dispatch(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Validate { file } => validate(&file),
        Command::Datum { label, isogeny } => {
            let iso = match isogeny {
                IsogenyArg::Sc => Isogeny::SimplyConnected,
                IsogenyArg::Adj => Isogeny::Adjoint,
            };
            let b = standard(&label, iso)?;
            Ok(Outcome::ok(serde_json::to_value(RootDatumJson::from_based(&b, Some(label)))?))
        }
        Command::Weyl(WeylCommand::Order { file }) => {
            let b = io::read_root_datum(&file)?.based()?;
            let t = b.classify()?;
            let w = WeylGroup::generate(&b)?;
            let oracle = order_from_type(&t);
            let ok = oracle == w.order().into();
            Ok(Outcome::checked(
                json!({ "type": t.label(), "order": w.order(), "degree_product": oracle.to_string(),
                        "checks": [{ "name": "order_equals_degree_product", "pass": ok }] }),
                ok,
            ))
        }
        Command::Weyl(WeylCommand::Normalizer { file, subset }) => {
            let b = io::read_root_datum(&file)?.based()?;
            let w = WeylGroup::generate(&b)?;
            let h = w.normalizer_decomposition(&subset.0)?;
            Ok(Outcome::checked(
                json!({ "I": subset.0, "orders": { "W": w.order(), "N_W(W_I)": h.normalizer.len(),
                        "W_I": h.parabolic.len(), "N_W(I)": h.stabilizer.len() },
                        "checks": [{ "name": "howlett_decomposition", "pass": h.check }] }),
                h.check,
            ))
        }
        Command::Steinberg(SteinbergCommand::Classify { file, bound }) => {
            let (based, m) = io::read_steinberg(&file)?;
            let s = classify_steinberg(&based, &m, bound)?;
            Ok(Outcome::ok(json!({ "kind": s.kind, "m": s.m, "a": s.a, "p": m.p(), "q": m.q(),
                                   "tau_on_simple": s.tau_on_simple(), "type": based.classify()?.label() })))
        }
        Command::Fixed { steinberg, subset } => fixed(&steinberg, subset),
        Command::Levi(LeviCommand::Decompose { datum, steinberg, subset }) => {
            let (w, f) = weyl_and_twist(datum.as_deref(), steinberg.as_deref())?;
            let d = levi::decompose_report(&w, &f, &subset.0)?;
            let ok = d.checks.iter().all(|c| c.pass);
            let mut doc = serde_json::to_value(&d)?;
            doc["wreath_shape"] = serde_json::to_value(d.wreath_shape())?;
            Ok(Outcome::checked(doc, ok))
        }
        Command::Isotypy(c) => isotypy(c),
        Command::Group(GroupCommand::Classes { file }) => {
            let g = io::read_group(&file)?;
            Ok(Outcome::ok(json!({ "order": g.order(), "classes": io::classes_to_json(&g) })))
        }
        Command::Group(GroupCommand::Table { file }) => {
            let g = io::read_group(&file)?;
            let irr = character_table(&g)?;
            let rows: Vec<_> = irr.iter().map(io::character_to_json).collect();
            Ok(Outcome::ok(json!({ "order": g.order(), "exponent": g.exponent(), "prime": g.table_prime()?,
                                   "classes": io::classes_to_json(&g), "characters": rows })))
        }
        Command::Clifford(c) => clifford(c),
        Command::Wreath(WreathCommand::Build(a)) => {
            let (h, acting) = wreath_inputs(&a)?;
            let (g, n) = crate::clifford::build_wreath(&h, &acting, a.n)?;
            Ok(Outcome::ok(json!({ "order": g.order(), "group": GroupJson::from_group(&g),
                                   "base_order": n.order(), "base": GroupJson::from_group(&n) })))
        }
        Command::Wreath(WreathCommand::Verify(a)) => {
            let (h, acting) = wreath_inputs(&a)?;
            let r = verify_wreath_theorem(&h, &acting, a.n)?;
            Ok(Outcome::ok(serde_json::to_value(r)?))
        }
    }
}

fn validate(file: &Path) -> Result<Outcome> {
    let doc = io::read_root_datum(file)?;
    let raw = doc.raw()?;
    let violations = raw.validate();
    if !violations.is_empty() {
        let v: Vec<_> = violations
            .iter()
            .map(|v| json!({ "axiom": v.axiom.to_string(), "root": v.root, "detail": v.detail }))
            .collect();
        return Ok(Outcome { doc: json!({ "valid": false, "violations": v }), ok: true, invalid: true });
    }
    match doc.based() {
        Ok(b) => Ok(Outcome::ok(json!({ "valid": true, "type": b.classify()?.label(), "simple": b.simple() }))),
        Err(e) => Ok(Outcome { doc: json!({ "valid": false, "base_error": e.to_string() }), ok: true, invalid: true }),
    }
}

fn weyl_and_twist(datum: Option<&Path>, steinberg: Option<&Path>) -> Result<(WeylGroup, Twist)> {
    match (datum, steinberg) {
        (_, Some(s)) => {
            let (based, m) = io::read_steinberg(s)?;
            let st = classify_steinberg(&based, &m, DEFAULT_STEINBERG_BOUND)?;
            let w = WeylGroup::generate(&based)?;
            let f = Twist::from_steinberg(&w, &st)?;
            Ok((w, f))
        }
        (Some(d), None) => {
            let b = io::read_root_datum(d)?.based()?;
            let w = WeylGroup::generate(&b)?;
            let f = Twist::identity(&w);
            Ok((w, f))
        }
        (None, None) => Err(Error::Invalid("give a root datum file or --steinberg".into())),
    }
}

fn fixed(steinberg: &Path, subset: Option<Subset>) -> Result<Outcome> {
    let (w, f) = weyl_and_twist(None, Some(steinberg))?;
    let fp = fixed_points(&w, &f)?;
    let mut doc = json!({
        "orders": { "W": w.order(), "W^F": fp.elements.len() },
        "coxeter_type": fp.coxeter_type.label(),
        "orbits": fp.orbits,
        "coxeter_matrix": fp.coxeter_matrix,
        "checks": [{ "name": "w_J_generate_W^F", "pass": true }],
    });
    let mut ok = true;
    if let Some(Subset(i)) = subset {
        let r = relative_normalizers_report(&w, &f, &fp, &i)?;
        ok = r.all_pass();
        doc["I"] = json!(i);
        doc["orders"] = json!({
            "W": w.order(),
            "W^F": r.fixed_order,
            "N_{W^F}(I)": r.stabilizer.len(),
            "N_{W^F}(I,tau)": r.orbit_stabilizer.len(),
            "literal_conjugators": r.literal_conjugators.len(),
            "N_{W^F}(W_I)": r.normalizer.len(),
            "N_{W^F}(W_I^F)": r.fixed_normalizer.len(),
            "W_I^F": r.parabolic_fixed.len(),
        });
        doc["checks"] = serde_json::to_value(&r.checks)?;
    }
    Ok(Outcome::checked(doc, ok))
}

fn isotypy(c: IsotypyCommand) -> Result<Outcome> {
    match c {
        IsotypyCommand::Classify(a) => {
            let m = io::read_pmorphism(&a.file, a.p)?;
            Ok(Outcome::ok(serde_json::to_value(m.classify())?))
        }
        IsotypyCommand::Factor(a) => {
            let m = io::read_pmorphism(&a.file, a.p)?;
            let fac = factor_isotypy(&m)?;
            let recomposes = fac.recompose()? == m;
            let (c2, c, c1) = (fac.psi2.classify(), fac.psi.classify(), fac.psi1.classify());
            let contracts = c2.surjective && c2.kernel_connected && c.injective && c1.surjective && c1.kernel_connected;
            let doc = json!({
                "psi2": io::pmorphism_to_json(&fac.psi2),
                "psi": io::pmorphism_to_json(&fac.psi),
                "psi1": io::pmorphism_to_json(&fac.psi1),
                "classification": { "psi2": c2, "psi": c, "psi1": c1 },
                "checks": [
                    { "name": "recomposes", "pass": recomposes },
                    { "name": "factor_contracts", "pass": contracts },
                ],
            });
            Ok(Outcome::checked(doc, recomposes && contracts))
        }
        IsotypyCommand::Dual(a) => {
            let m = io::read_pmorphism(&a.file, a.p)?;
            let dual = m.dual();
            let consistent = check_duality(&m).is_ok();
            Ok(Outcome::checked(
                json!({ "dual": io::pmorphism_to_json(&dual), "classification": m.classify(),
                        "dual_classification": dual.classify(),
                        "checks": [{ "name": "duality_equivalences", "pass": consistent }] }),
                consistent,
            ))
        }
    }
}

fn embedding(p: &PairArgs) -> Result<SubgroupEmbedding> {
    let g = io::read_group(&p.g)?;
    let n = io::read_group(&p.n)?;
    match &p.images {
        None => SubgroupEmbedding::inclusion(&n, &g),
        Some(path) => {
            let imgs: Vec<Vec<u32>> = io::read_json(path)?;
            let imgs = imgs.iter().map(|x| Perm::from_one_based(x)).collect::<Result<Vec<_>>>()?;
            SubgroupEmbedding::new(n, g, imgs)
        }
    }
}

fn pick(irr: Vec<Character>, k: Option<usize>) -> Result<Vec<(usize, Character)>> {
    match k {
        None => Ok(irr.into_iter().enumerate().collect()),
        Some(k) if k < irr.len() => Ok(vec![(k, irr[k].clone())]),
        Some(k) => Err(Error::Invalid(format!("character index {k} out of range (table has {} rows)", irr.len()))),
    }
}

fn clifford(c: CliffordCommand) -> Result<Outcome> {
    match c {
        CliffordCommand::Restrict { pair, chi } => {
            let e = embedding(&pair)?;
            let mut out = Vec::new();
            for (k, x) in pick(character_table(e.parent())?, chi)? {
                let r = restrict(&x, &e)?;
                out.push(json!({ "chi": k, "values": io::character_to_json(&r.character),
                                 "multiplicities": r.multiplicities, "multiplicity_free": r.is_multiplicity_free() }));
            }
            Ok(Outcome::ok(json!({ "restrictions": out })))
        }
        CliffordCommand::Induce { pair, theta } => {
            let e = embedding(&pair)?;
            let mut out = Vec::new();
            for (k, t) in pick(character_table(e.sub())?, theta)? {
                let ind = induce(&t, &e)?;
                out.push(json!({ "theta": k, "values": io::character_to_json(&ind), "multiplicities": ind.decompose()? }));
            }
            Ok(Outcome::ok(json!({ "inductions": out })))
        }
        CliffordCommand::Stabilizer { pair, theta } => {
            let e = embedding(&pair)?;
            let (_, t) = pick(character_table(e.sub())?, Some(theta))?.remove(0);
            let s = stabilizer_of_character(&t, &e)?;
            Ok(Outcome::ok(json!({ "theta": theta, "order": s.order(), "stabilizer": GroupJson::from_group(&s) })))
        }
        CliffordCommand::Extend { pair, theta } => {
            let e = embedding(&pair)?;
            let mut out = Vec::new();
            for (k, t) in pick(character_table(e.sub())?, theta)? {
                let s = stabilizer_of_character(&t, &e)?;
                let to_s = SubgroupEmbedding::new(e.sub().clone(), s.clone(), e.images().to_vec())?;
                let ext = extension_exists(&t, &to_s)?;
                out.push(json!({ "theta": k, "stabilizer_order": s.order(),
                                 "extension": ext.as_ref().map(io::character_to_json) }));
            }
            Ok(Outcome::ok(json!({ "extensions": out })))
        }
        CliffordCommand::LemmaEquivalence { pair, theta } => {
            let e = embedding(&pair)?;
            let mut out = Vec::new();
            for (k, t) in pick(character_table(e.sub())?, theta)? {
                let mut r = serde_json::to_value(verify_lemma_equivalence(&e, &t)?)?;
                r["theta"] = json!(k);
                out.push(r);
            }
            Ok(Outcome::ok(json!({ "reports": out })))
        }
        CliffordCommand::LemmaAbelian { pair, chi } => {
            let e = embedding(&pair)?;
            let mut out = Vec::new();
            for (k, x) in pick(character_table(e.parent())?, chi)? {
                let mut r = serde_json::to_value(verify_abelian_lemma(&e, &x)?)?;
                r["chi"] = json!(k);
                out.push(r);
            }
            Ok(Outcome::ok(json!({ "reports": out })))
        }
    }
}

fn wreath_inputs(a: &WreathArgs) -> Result<(PermGroup, PermGroup)> {
    let h = io::read_group(&a.h)?;
    let acting = match &a.a {
        Some(p) => io::read_group(p)?,
        None => PermGroup::new(h.degree(), vec![])?,
    };
    Ok((h, acting))
}

