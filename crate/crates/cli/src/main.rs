//! `bds`: check, build, and classify braided dihedral sets and Bruck loops stored as plain-text tables.

mod output;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use bds::classify::{
    bp3_involutions, brute_force_solutions, catalog_report, classify_lbts_upto_81, classify_order_3p, classify_order_p,
    classify_order_p2, parse_expected, ClassificationReport, ClassifyError, Constraints,
};
use bds::constructions::{
    build_bp3_condensed, build_bpq, build_l3, cyclic_group, direct_product, elementary_abelian, elementary_lbts_descriptor,
    householder_braiding_check, l3_descriptor, lbds_from_descriptor, signed_diagonal, stock_solution, ConstructionError,
    LbdsDescriptor, STOCK_FAMILIES,
};
use bds::format::{
    emit_braided, emit_permutations, emit_tables, looks_braided, parse_braided, parse_tables, NamedTable, ParseError,
};
use bds::morphisms::{
    automorphism_group, automorphism_group_of, conjugacy_classes, involution_classes, involution_classes_of, AutGroup,
    Algebra, SearchError, SearchOptions, DEFAULT_BUDGET,
};
use bds::tables::{check_law_capped, BruckLoopData, LawId, MulTable, QuasigroupData, Structure};
use bds::{BraidedSet, Permutation};
use clap::{Args, Parser, Subcommand};

use output::{Format, Table};

#[derive(Parser)]
#[command(name = "bds", version, about = "Braided dihedral sets, Bruck loops and their classification")]
struct Cli {
    /// Node budget for each automorphism or isomorphism search.
    #[arg(long, global = true, env = "BDS_SEARCH_BUDGET", default_value_t = DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Layout of result tables.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify identities on a table file or a braided-set file.
    Check(CheckArgs),
    /// Write a table or braided set from a built-in family.
    Construct(ConstructArgs),
    /// Classify Latin braided dihedral sets of a given order type.
    Classify(ClassifyArgs),
    /// Count conjugacy classes of involutive automorphisms of Bruck loops.
    Nci(NciArgs),
    /// Compare involution-class counts with an expected two-column file.
    Report(ReportArgs),
    /// Enumerate small solutions exhaustively, up to relabelling.
    Search(SearchArgs),
    /// Automorphism group of a table or braided set.
    Aut(AutArgs),
    /// Numerical check of the Householder reflection braiding.
    Householder(HouseholderArgs),
}

#[derive(Args)]
struct CheckArgs {
    path: PathBuf,
    /// Braid relation (braided files only).
    #[arg(long)]
    solution: bool,
    /// Dihedral relations (braided files only).
    #[arg(long)]
    dihedral: bool,
    /// Triality relations (braided files only).
    #[arg(long)]
    triality: bool,
    /// The (first) multiplication is a quasigroup.
    #[arg(long)]
    latin: bool,
    /// Nondegenerate, bijective, with mutually inverse diagonal maps (braided files only).
    #[arg(long)]
    biquandle: bool,
    /// A named identity such as LS, Bol or Moufang; may be repeated.
    #[arg(long = "law", value_name = "NAME")]
    laws: Vec<LawId>,
    /// Maximum counterexamples printed per property.
    #[arg(long, default_value_t = 5)]
    cap: usize,
}

#[derive(Args)]
struct ConstructArgs {
    /// One of: bpq, bp3-condensed, l3, cyclic, elementary, lbds, stock, ap3.
    family: String,
    /// Family parameters; negative numbers are accepted.
    #[arg(allow_negative_numbers = true)]
    params: Vec<String>,
    /// Output file (standard output when absent).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// p, p2, 3p or lbts.
    kind: String,
    /// The odd prime (not used by `lbts`).
    prime: Option<u64>,
    /// Also print the non-isomorphism certificate of every pair.
    #[arg(long)]
    certificates: bool,
}

#[derive(Args)]
struct NciArgs {
    /// Table files; each table is one loop, named by its `@name` header or the file name.
    paths: Vec<PathBuf>,
    /// Include the associative loops of order 27 built internally.
    #[arg(long)]
    builtin: bool,
}

#[derive(Args)]
struct ReportArgs {
    paths: Vec<PathBuf>,
    /// Two-column file of loop names and expected counts.
    #[arg(long)]
    expected: PathBuf,
    /// Include the associative loops of order 27 built internally.
    #[arg(long)]
    builtin: bool,
}

#[derive(Args)]
struct SearchArgs {
    n: usize,
    #[arg(long)]
    latin: bool,
    #[arg(long)]
    dihedral: bool,
    #[arg(long)]
    triality: bool,
    /// Second component equal to the first argument.
    #[arg(long)]
    derived: bool,
    /// Print every solution found.
    #[arg(long)]
    emit: bool,
}

#[derive(Args)]
struct AutArgs {
    path: PathBuf,
    /// Print the conjugacy classes.
    #[arg(long)]
    classes: bool,
    /// Print the conjugacy classes of involutive automorphisms (identity included).
    #[arg(long)]
    involutions: bool,
    /// Write the generators as a permutation list.
    #[arg(long, value_name = "FILE")]
    generators: Option<PathBuf>,
    /// Write every element as a permutation list.
    #[arg(long, value_name = "FILE")]
    elements: Option<PathBuf>,
    /// Largest group enumerated element by element.
    #[arg(long, default_value_t = 2_000_000)]
    cap: usize,
}

#[derive(Args)]
struct HouseholderArgs {
    #[arg(long, default_value_t = 3)]
    dim: usize,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// Outcome of a command that ran to completion.
enum Status {
    Holds,
    Violated,
}

struct Ctx {
    opts: SearchOptions,
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx { opts: SearchOptions::with_budget(cli.budget), format: cli.format };
    let result = match cli.command {
        Command::Check(a) => check(&ctx, a),
        Command::Construct(a) => construct(a),
        Command::Classify(a) => classify(&ctx, a),
        Command::Nci(a) => nci(&ctx, a),
        Command::Report(a) => report(&ctx, a),
        Command::Search(a) => search(&ctx, a),
        Command::Aut(a) => aut(&ctx, a),
        Command::Householder(a) => householder_cmd(a),
    };
    match result {
        Ok(Status::Holds) => ExitCode::SUCCESS,
        Ok(Status::Violated) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    for cause in e.chain() {
        if let Some(SearchError::BudgetExceeded { .. }) = cause.downcast_ref::<SearchError>() {
            return 3;
        }
        match cause.downcast_ref::<ClassifyError>() {
            Some(ClassifyError::Search(SearchError::BudgetExceeded { .. })) => return 3,
            Some(ClassifyError::Duplicate { .. } | ClassifyError::RepresentativeFails { .. } | ClassifyError::Inconsistent(_)) => {
                return 1
            }
            _ => {}
        }
    }
    2
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_tables(path: &Path) -> Result<Vec<NamedTable>> {
    parse_tables(&read(path)?).map_err(|e: ParseError| anyhow!("{}: {e}", path.display()))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verdict(name: &str, failures: &[String]) -> bool {
    if failures.is_empty() {
        println!("PASS {name}");
        true
    } else {
        println!("FAIL {name}");
        for f in failures {
            println!("  counterexample: {f}");
        }
        false
    }
}

fn latin_failures(m: &MulTable, what: &str) -> Vec<String> {
    if let Some(r) = m.first_non_permutation_row() {
        vec![format!("row {r} of {what} is not a permutation: {:?}", m.row(r).collect::<Vec<_>>())]
    } else if let Some(c) = m.first_non_permutation_column() {
        vec![format!("column {c} of {what} is not a permutation: {:?}", m.column(c).collect::<Vec<_>>())]
    } else {
        Vec::new()
    }
}

fn law_failures(s: Structure<'_>, law: LawId, cap: usize) -> Result<Vec<String>> {
    Ok(check_law_capped(s, law, cap)?.iter().map(ToString::to_string).collect())
}

fn check(_ctx: &Ctx, a: CheckArgs) -> Result<Status> {
    let text = read(&a.path)?;
    let tables = parse_tables(&text).map_err(|e| anyhow!("{}: {e}", a.path.display()))?;
    let mut ok = true;
    if looks_braided(&tables) {
        let b = parse_braided(&text).map_err(|e| anyhow!("{}: {e}", a.path.display()))?;
        let any = a.solution || a.dihedral || a.triality || a.latin || a.biquandle || !a.laws.is_empty();
        let cap = a.cap.max(1);
        let strs = |v: Vec<bds::tables::Violation>| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        if a.solution || !any {
            ok &= verdict("solution", &strs(b.is_solution_capped(cap)));
        }
        if a.dihedral || !any {
            ok &= verdict("dihedral", &strs(b.is_dihedral_capped(cap)));
        }
        if a.triality {
            ok &= verdict("triality", &strs(b.is_triality_capped(cap)));
        }
        if a.latin {
            ok &= verdict("latin", &latin_failures(b.circ(), "circ"));
        }
        if a.biquandle {
            let fails = if b.is_biquandle() { Vec::new() } else { vec![biquandle_reason(&b)] };
            ok &= verdict("biquandle", &fails);
        }
        let s = Structure { mul: b.circ(), ldiv: b.circ_ldiv(), rdiv: b.circ_rdiv() };
        for &law in &a.laws {
            ok &= verdict(&format!("law {}", law.name()), &law_failures(s, law, cap)?);
        }
    } else {
        if a.solution || a.dihedral || a.triality || a.biquandle {
            bail!("{}: solution, dihedral, triality and biquandle checks need @circ and @bullet tables", a.path.display());
        }
        let many = tables.len() > 1;
        for (i, t) in tables.iter().enumerate() {
            let label = t.name.clone().unwrap_or_else(|| format!("table {}", i + 1));
            let prefix = |s: &str| if many { format!("{label}: {s}") } else { s.to_string() };
            if a.latin || a.laws.is_empty() {
                ok &= verdict(&prefix("latin"), &latin_failures(&t.table, "the table"));
            }
            let q = QuasigroupData::from_mul(t.table.clone()).ok();
            let s = q.as_ref().map_or_else(|| Structure::from(&t.table), Structure::from);
            for &law in &a.laws {
                ok &= verdict(&prefix(&format!("law {}", law.name())), &law_failures(s, law, a.cap.max(1))?);
            }
        }
    }
    Ok(if ok { Status::Holds } else { Status::Violated })
}

fn biquandle_reason(b: &BraidedSet) -> String {
    let f = b.nondegeneracy_flags();
    if !f.left {
        "not left nondegenerate".into()
    } else if !f.right {
        "not right nondegenerate".into()
    } else if !f.bijective {
        "the map is not bijective".into()
    } else {
        "the diagonal maps are not mutually inverse".into()
    }
}

fn nums<T: std::str::FromStr>(family: &str, params: &[String], count: usize) -> Result<Vec<T>> {
    if params.len() != count {
        bail!("{family} takes {count} parameter(s), got {}", params.len());
    }
    params.iter().map(|p| p.parse::<T>().map_err(|_| anyhow!("{family}: `{p}` is not a valid parameter"))).collect()
}

fn construct(a: ConstructArgs) -> Result<Status> {
    let f = a.family.as_str();
    let p = &a.params;
    let table = |name: String, comment: String, m: &MulTable| emit_tables(&[NamedTable::new(Some(&name), m.clone()).with_comment(comment)]);
    let text = match f {
        "bpq" => {
            let v: Vec<u64> = nums(f, p, 2)?;
            let b = build_bpq(v[0], v[1])?;
            table(format!("B_{}_{}", v[0], v[1]), format!("nonassociative Bruck loop of order {}", v[0] * v[1]), b.table())
        }
        "bp3-condensed" => {
            let v: Vec<u64> = nums(f, p, 1)?;
            let b = build_bp3_condensed(v[0])?;
            table(format!("B_{}_3", v[0]), format!("nonassociative Bruck loop of order {}", 3 * v[0]), b.table())
        }
        "l3" => {
            nums::<usize>(f, p, 0)?;
            table("L_3".into(), "nonassociative commutative Moufang loop of exponent 3, order 81".into(), build_l3().table())
        }
        "cyclic" => {
            let v: Vec<usize> = nums(f, p, 1)?;
            if v[0] == 0 {
                bail!("cyclic: order must be positive");
            }
            table(format!("Z_{}", v[0]), format!("cyclic group of order {}", v[0]), cyclic_group(v[0]).table())
        }
        "elementary" => {
            let v: Vec<usize> = nums(f, p, 2)?;
            let l = elementary_abelian(v[0], v[1] as u32)?;
            table(format!("Z_{}^{}", v[0], v[1]), format!("elementary abelian group of order {}", l.order()), l.table())
        }
        "lbds" => {
            let (d, comment) = lbds_descriptor(p)?;
            emit_braided(&[&comment], &lbds_from_descriptor(&d).braided)
        }
        "stock" => {
            let Some((name, rest)) = p.split_first() else {
                let known: Vec<String> = STOCK_FAMILIES.iter().map(|(n, a)| format!("{n} {a}")).collect();
                bail!("stock needs a family name; known: {}", known.join("; "));
            };
            let params: Vec<usize> = nums(name, rest, rest.len())?;
            let b = stock_solution(name, &params)?;
            let shown: Vec<String> = rest.to_vec();
            emit_braided(&[format!("stock {name} {}", shown.join(" ")).trim_end()], &b)
        }
        "ap3" => {
            let v: Vec<u64> = nums(f, p, 1)?;
            let perms: Vec<Permutation> = bds::constructions::ap3_group(v[0]).iter().map(|g| g.as_permutation()).collect();
            format!("# automorphisms of B_{}_3\n{}", v[0], emit_permutations(3 * v[0] as usize, &perms))
        }
        _ => bail!("unknown family `{f}`; expected bpq, bp3-condensed, l3, cyclic, elementary, lbds, stock or ap3"),
    };
    write_out(a.output.as_deref(), &text)?;
    Ok(Status::Holds)
}

/// Descriptor families accepted by `construct lbds`.
fn lbds_descriptor(p: &[String]) -> Result<(LbdsDescriptor, String)> {
    let Some((kind, rest)) = p.split_first() else {
        bail!("lbds needs a kind: zp P SIGN, l3 I, lbts A B, bp3 P K");
    };
    let kind = kind.as_str();
    Ok(match kind {
        "zp" => {
            let v: Vec<i64> = nums(kind, rest, 2)?;
            let n = usize::try_from(v[0]).map_err(|_| anyhow!("zp: order must be positive"))?;
            if v[1] != 1 && v[1] != -1 {
                bail!("zp: the sign must be 1 or -1");
            }
            let s = signed_diagonal(n, &[v[1] as i8])?;
            let d = LbdsDescriptor::new(BruckLoopData::new(cyclic_group(n))?, s)?;
            (d, format!("(Z/{n}, +) with S = {}", if v[1] == 1 { "+1" } else { "-1" }))
        }
        "l3" => {
            let v: Vec<usize> = nums(kind, rest, 1)?;
            (l3_descriptor(v[0])?, format!("L_3 with S_{}", v[0]))
        }
        "lbts" => {
            let v: Vec<usize> = nums(kind, rest, 2)?;
            (elementary_lbts_descriptor(v[0], v[1])?, format!("(Z/3)^{} with S = +1 on {} and -1 on {} factors", v[0] + v[1], v[0], v[1]))
        }
        "bp3" => {
            let v: Vec<u64> = nums(kind, rest, 2)?;
            let k = v[1] as usize;
            if !(1..=4).contains(&k) {
                bail!("bp3: the involution index must lie in 1..=4");
            }
            let (g, label) = &bp3_involutions(v[0])[k - 1];
            let d = LbdsDescriptor::new(build_bp3_condensed(v[0])?, g.as_permutation())?;
            (d, format!("B_{}_3 with S = {label}", v[0]))
        }
        _ => bail!("unknown lbds kind `{kind}`; expected zp, l3, lbts or bp3"),
    })
}

fn print_classification(ctx: &Ctx, r: &ClassificationReport, certificates: bool) {
    println!("{}", r.title);
    let mut t = Table::new(["#", "order", "representative", "associative", "fixed points", "triality"]);
    for (i, e) in r.entries.iter().enumerate() {
        t.row([(i + 1).to_string(), e.order().to_string(), e.name.clone(), yes(e.associative), e.fixed_points().to_string(), yes(e.triality)]);
    }
    print!("{}", t.render(ctx.format));
    println!("classes: {}", r.count());
    let k = r.count();
    println!("pairwise certificates: {}/{}", r.certificates.len(), k * k.saturating_sub(1) / 2);
    if certificates {
        for c in &r.certificates {
            println!("  {} vs {}: {}", r.entries[c.left].name, r.entries[c.right].name, c.certificate);
        }
    }
}

fn yes(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn classify(ctx: &Ctx, a: ClassifyArgs) -> Result<Status> {
    let prime = || a.prime.ok_or_else(|| anyhow!("`classify {}` needs a prime", a.kind));
    let r = match a.kind.as_str() {
        "p" => classify_order_p(prime()?, ctx.opts)?,
        "p2" => classify_order_p2(prime()?, ctx.opts)?,
        "3p" => classify_order_3p(prime()?, ctx.opts)?,
        "lbts" => classify_lbts_upto_81(ctx.opts)?,
        k => bail!("unknown order type `{k}`; expected p, p2, 3p or lbts"),
    };
    print_classification(ctx, &r, a.certificates);
    Ok(if r.pairwise_distinct() { Status::Holds } else { Status::Violated })
}

fn builtin_27() -> Vec<(String, MulTable)> {
    let z3 = cyclic_group(3);
    let z9 = cyclic_group(9);
    vec![
        ("27/1".into(), elementary_abelian(3, 3).expect("3 is prime").table().clone()),
        ("27/2".into(), direct_product(&z3, &z9).table().clone()),
        ("27/7".into(), cyclic_group(27).table().clone()),
    ]
}

fn load_loops(paths: &[PathBuf], builtin: bool) -> Result<Vec<(String, MulTable)>> {
    let mut loops = if builtin { builtin_27() } else { Vec::new() };
    for path in paths {
        let tables = read_tables(path)?;
        let stem = path.file_stem().map_or_else(|| "loop".to_string(), |s| s.to_string_lossy().into_owned());
        let many = tables.len() > 1;
        for (i, t) in tables.into_iter().enumerate() {
            let name = t.name.unwrap_or_else(|| if many { format!("{stem}#{}", i + 1) } else { stem.clone() });
            loops.push((name, t.table));
        }
    }
    if loops.is_empty() {
        bail!("no loops given");
    }
    Ok(loops)
}

fn nci(ctx: &Ctx, a: NciArgs) -> Result<Status> {
    let loops = load_loops(&a.paths, a.builtin)?;
    let r = catalog_report(&loops, None, ctx.opts)?;
    let mut t = Table::new(["loop", "order", "n_CI"]);
    for row in &r.rows {
        t.row([row.name.clone(), row.order.to_string(), row.n_ci.to_string()]);
    }
    print!("{}", t.render(ctx.format));
    println!("total: {}", r.total);
    Ok(Status::Holds)
}

fn report(ctx: &Ctx, a: ReportArgs) -> Result<Status> {
    let expected = parse_expected(&read(&a.expected)?).map_err(|e| anyhow!("{}: {e}", a.expected.display()))?;
    let loops = load_loops(&a.paths, a.builtin)?;
    let r = catalog_report(&loops, Some(&expected), ctx.opts)?;
    let mut t = Table::new(["loop", "n_CI", "expected", "match"]);
    for row in &r.rows {
        let (exp, m) = match row.expected {
            Some(e) => (e.to_string(), yes(e == row.n_ci)),
            None => ("-".into(), "-".into()),
        };
        t.row([row.name.clone(), row.n_ci.to_string(), exp, m]);
    }
    print!("{}", t.render(ctx.format));
    println!("rows: {}/{} match", r.matched(), r.rows.len());
    if !r.missing.is_empty() {
        println!("missing: {}", r.missing.join(", "));
    }
    let expected_total = r.expected_total.unwrap_or(0);
    let verdict = if r.total == expected_total { "match" } else { "mismatch" };
    println!("total: {}/{} {verdict}", r.total, expected_total);
    Ok(if r.all_match() && r.total == expected_total { Status::Holds } else { Status::Violated })
}

fn search(ctx: &Ctx, a: SearchArgs) -> Result<Status> {
    let k = Constraints { latin: a.latin, dihedral: a.dihedral, triality: a.triality, derived: a.derived };
    let sols = brute_force_solutions(a.n, k)?;
    if a.emit {
        for (i, s) in sols.iter().enumerate() {
            println!("{}", emit_braided(&[&format!("solution {} of {}", i + 1, sols.len())], s));
        }
    }
    let mut t = Table::new(["order", "classes"]);
    t.row([a.n.to_string(), sols.len().to_string()]);
    print!("{}", t.render(ctx.format));
    Ok(Status::Holds)
}

fn aut(ctx: &Ctx, a: AutArgs) -> Result<Status> {
    let text = read(&a.path)?;
    let tables = parse_tables(&text).map_err(|e| anyhow!("{}: {e}", a.path.display()))?;
    let (g, alg): (AutGroup, Option<Algebra>) = if looks_braided(&tables) {
        let b = parse_braided(&text).map_err(|e| anyhow!("{}: {e}", a.path.display()))?;
        let alg = Algebra::new(vec![b.circ().clone(), b.bullet().clone()], Vec::new());
        (automorphism_group_of(&alg, ctx.opts)?, Some(alg))
    } else {
        let [t] = tables.as_slice() else {
            bail!("{}: expected one table or a braided set, found {} tables", a.path.display(), tables.len());
        };
        (automorphism_group(&t.table, ctx.opts)?, None)
    };
    println!("order: {}", g.order());
    println!("base: {}", join(&g.base()));
    println!("orbit lengths: {}", join(&g.orbit_lengths()));
    println!("generators: {}", g.generators().len());
    println!("search nodes: {}", g.nodes);
    if let Some(path) = &a.generators {
        fs::write(path, emit_permutations(g.degree(), g.generators()))
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    if let Some(path) = &a.elements {
        let els = g.elements(a.cap)?;
        fs::write(path, emit_permutations(g.degree(), &els)).with_context(|| format!("cannot write {}", path.display()))?;
    }
    if a.classes {
        print_classes(ctx, "conjugacy classes", &conjugacy_classes(&g, a.cap)?);
    }
    if a.involutions {
        let classes = match &alg {
            Some(alg) => involution_classes_of(alg, ctx.opts)?,
            None => involution_classes(&tables[0].table, ctx.opts)?,
        };
        print_classes(ctx, "involution classes", &classes);
    }
    Ok(Status::Holds)
}

fn print_classes(ctx: &Ctx, title: &str, classes: &[bds::morphisms::ConjugacyClass]) {
    println!("{title}: {}", classes.len());
    let mut t = Table::new(["#", "element order", "size", "fixed points", "representative"]);
    for (i, c) in classes.iter().enumerate() {
        t.row([
            (i + 1).to_string(),
            c.order.to_string(),
            c.size().to_string(),
            c.representative.fixed_points().len().to_string(),
            c.representative.to_string(),
        ]);
    }
    print!("{}", t.render(ctx.format));
}

fn join(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn householder_cmd(a: HouseholderArgs) -> Result<Status> {
    if a.tol.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) {
        bail!("tolerance must be positive");
    }
    match householder_braiding_check(a.dim, a.trials, a.tol, a.seed) {
        Ok(r) => {
            println!("dimension: {}", r.dim);
            println!("trials: {}", r.trials);
            println!("braid residual: {:e}", r.braid_residual);
            println!("involution residual: {:e}", r.involution_residual);
            println!("fixed point residual: {:e}", r.fixed_point_residual);
            println!("PASS residuals below {:e}", a.tol);
            Ok(Status::Holds)
        }
        Err(ConstructionError::ToleranceExceeded { worst, tol }) => {
            println!("FAIL worst residual {worst:e} exceeds {tol:e}");
            Ok(Status::Violated)
        }
        Err(e) => Err(e.into()),
    }
}
