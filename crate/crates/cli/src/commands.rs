use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use num_bigint::BigUint;
use symdesign::acceptance::run_all;
use symdesign::algebra::PrimePower;
use symdesign::constructions::{
    catalog, develop_difference_set, find_difference_set, projective_space, AmbientGroup, DifferenceSetSpec,
    CATALOG_NAMES,
};
use symdesign::design::{is_flag_transitive, verify_symmetric, DesignError, IncidenceStructure};
use symdesign::elimination::{
    admissible, corollary_families, load_catalog, run_catalog, select_rows, EliminationError, RowStatus,
};
use symdesign::perm::{PermError, Permutation, PermutationGroup};

/// Everything that ends a run early, with its exit status.
#[derive(Debug)]
pub enum CliError {
    /// The input was read fine but did not meet the expectation (exit 1).
    Violation(String),
    /// Arguments that parse but make no sense together (exit 2).
    Usage(String),
    /// A file could not be read or written (exit 3).
    Io { path: PathBuf, err: std::io::Error },
    /// A file or the embedded data is not in the expected format (exit 4).
    Malformed(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Violation(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io { .. } => 3,
            CliError::Malformed(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Violation(m) => write!(f, "{m}"),
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Io { path, err } => write!(f, "{}: {err}", path.display()),
            CliError::Malformed(m) => write!(f, "malformed input: {m}"),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|err| CliError::Io {
        path: path.to_path_buf(),
        err,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|err| CliError::Io {
        path: path.to_path_buf(),
        err,
    })
}

pub fn read_group(path: &Path) -> Result<PermutationGroup, CliError> {
    PermutationGroup::from_group_file(&read(path)?).map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))
}

fn read_design(path: &Path) -> Result<IncidenceStructure, CliError> {
    IncidenceStructure::parse(&read(path)?).map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))
}

fn internal(e: impl fmt::Display) -> CliError {
    CliError::Malformed(e.to_string())
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    /// Catalog name, `pg N Q`, or `diffset`.
    #[arg(required = true, num_args = 1..)]
    target: Vec<String>,
    /// Design output file; stdout when absent.
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
    /// Also write an automorphism group in group-file format.
    #[arg(long)]
    group_out: Option<PathBuf>,
    /// diffset: cyclic:N, elem:P:A, product:N,M,... or q8xz2.
    #[arg(long)]
    ambient: Option<String>,
    /// diffset: base set elements, by name (`5`, `(1,0,1,0)`) or index (`#3`).
    #[arg(long, num_args = 1..)]
    set: Vec<String>,
    /// diffset: search for a (|G|, k, λ) difference set instead.
    #[arg(long, requires = "lambda")]
    k: Option<usize>,
    #[arg(long, requires = "k")]
    lambda: Option<usize>,
}

fn parse_ambient(text: &str) -> Result<AmbientGroup, CliError> {
    let bad = || CliError::Usage(format!("unknown ambient group `{text}`"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let (kind, rest) = text.split_once(':').unwrap_or((text, ""));
    let g = match kind {
        "cyclic" => AmbientGroup::cyclic(num(rest)?),
        "elem" => {
            let (p, a) = rest.split_once(':').ok_or_else(bad)?;
            AmbientGroup::elementary_abelian(num(p)?, num(a)? as u32)
        }
        "product" => AmbientGroup::product(&rest.split(',').map(num).collect::<Result<Vec<_>, _>>()?),
        "q8xz2" => Ok(AmbientGroup::q8_times_z2()),
        _ => return Err(bad()),
    };
    g.map_err(|e| CliError::Usage(e.to_string()))
}

fn parse_element(g: &AmbientGroup, tok: &str) -> Result<usize, CliError> {
    if let Some(i) = tok.strip_prefix('#') {
        return i
            .parse::<usize>()
            .ok()
            .filter(|&i| i < g.order())
            .ok_or_else(|| CliError::Usage(format!("no element with index `{tok}`")));
    }
    (0..g.order())
        .find(|&x| g.element_name(x) == tok)
        .ok_or_else(|| CliError::Usage(format!("`{tok}` is not an element name")))
}

/// Right translations by a generating set of the ambient group.
fn translation_group(g: &AmbientGroup) -> Result<PermutationGroup, CliError> {
    let n = g.order();
    let mut group = PermutationGroup::trivial(n);
    let mut gens = Vec::new();
    for t in 0..n {
        let p = Permutation::from_images((0..n).map(|x| g.mul(x, t) as u32).collect()).map_err(internal)?;
        if !group.contains(&p).map_err(internal)? {
            gens.push(p);
            group = PermutationGroup::new(n, gens.clone()).map_err(internal)?;
        }
    }
    Ok(group)
}

fn usize_arg(s: &str, what: &str) -> Result<usize, CliError> {
    s.parse().map_err(|_| CliError::Usage(format!("{what} must be a non-negative integer, got `{s}`")))
}

pub fn construct(args: &ConstructArgs) -> Result<(), CliError> {
    let name = args.target[0].as_str();
    let diffset_only = args.ambient.is_some() || !args.set.is_empty() || args.k.is_some();
    if diffset_only && name != "diffset" {
        return Err(CliError::Usage("--ambient, --set, --k and --lambda go with `construct diffset`".into()));
    }
    let (design, group) = match name {
        "pg" => {
            let [_, n, q] = args.target.as_slice() else {
                return Err(CliError::Usage("construct pg N Q".into()));
            };
            let q = PrimePower::from_order(usize_arg(q, "Q")? as u64).map_err(|e| CliError::Usage(e.to_string()))?;
            let s = projective_space(usize_arg(n, "N")?, &q).map_err(|e| CliError::Usage(e.to_string()))?;
            (s.design, None)
        }
        "diffset" => {
            if args.target.len() != 1 {
                return Err(CliError::Usage("construct diffset takes no positional values".into()));
            }
            let ambient = parse_ambient(
                args.ambient
                    .as_deref()
                    .ok_or_else(|| CliError::Usage("construct diffset needs --ambient".into()))?,
            )?;
            let spec = match (args.k, args.lambda, args.set.is_empty()) {
                (Some(k), Some(l), true) => find_difference_set(&ambient, k, l)
                    .map_err(|e| CliError::Usage(e.to_string()))?
                    .ok_or_else(|| {
                        CliError::Violation(format!("no ({},{k},{l}) difference set in this group", ambient.order()))
                    })?,
                (None, None, false) => {
                    let set = args
                        .set
                        .iter()
                        .map(|t| parse_element(&ambient, t))
                        .collect::<Result<Vec<_>, _>>()?;
                    DifferenceSetSpec::new(ambient.clone(), set).map_err(|e| CliError::Usage(e.to_string()))?
                }
                _ => return Err(CliError::Usage("give either --set or --k with --lambda".into())),
            };
            let (design, _) = develop_difference_set(&spec).map_err(|e| CliError::Violation(e.to_string()))?;
            (design, Some(translation_group(&spec.ambient)?))
        }
        _ => {
            if args.target.len() != 1 {
                return Err(CliError::Usage(format!("`{name}` takes no further values")));
            }
            let inst = catalog(name).map_err(|_| {
                CliError::Usage(format!("unknown design `{name}`; known: pg, diffset, {}", CATALOG_NAMES.join(", ")))
            })?;
            (inst.design, inst.group)
        }
    };
    match &args.output {
        Some(path) => write(path, &design.to_text())?,
        None => print!("{}", design.to_text()),
    }
    if let Some(path) = &args.group_out {
        let g = group.ok_or_else(|| CliError::Usage(format!("no group is shipped with `{name}`")))?;
        write(path, &g.to_group_file())?;
    }
    if let Some(path) = &args.output {
        let params = verify_symmetric(&design).map_err(|e| CliError::Violation(e.to_string()))?;
        println!("wrote {params} design to {}", path.display());
    }
    Ok(())
}

pub fn verify(path: &Path) -> Result<(), CliError> {
    let d = read_design(path)?;
    match verify_symmetric(&d) {
        Ok(p) => {
            println!("{p}");
            Ok(())
        }
        Err(e) => {
            println!("not a symmetric design: {e}");
            Err(CliError::Violation("verification failed".into()))
        }
    }
}

fn labels(points: &[usize]) -> String {
    let l: Vec<String> = points.iter().map(|p| (p + 1).to_string()).collect();
    format!("{{{}}}", l.join(","))
}

pub fn group_order(g: &PermutationGroup) -> Result<(), CliError> {
    println!("{}", g.order());
    Ok(())
}

pub fn group_orbits(g: &PermutationGroup) -> Result<(), CliError> {
    for orbit in g.orbits() {
        println!("{}", labels(&orbit));
    }
    Ok(())
}

fn primitivity(g: &PermutationGroup) -> Result<String, CliError> {
    match g.imprimitivity_witness() {
        Ok(None) => Ok("yes".into()),
        Ok(Some(s)) => Ok(format!("no ({}×{} system)", s.class_size(), s.num_classes())),
        Err(PermError::NotTransitive) => Ok("no (intransitive)".into()),
        Err(e) => Err(internal(e)),
    }
}

pub fn group_primitive(g: &PermutationGroup) -> Result<(), CliError> {
    println!("primitive: {}", primitivity(g)?);
    if let Ok(Some(s)) = g.imprimitivity_witness() {
        for class in s.classes() {
            println!("{}", labels(&class));
        }
    }
    Ok(())
}

pub fn group_subdegrees(g: &PermutationGroup, point: usize) -> Result<(), CliError> {
    if point == 0 || point > g.degree() {
        return Err(CliError::Usage(format!("--point must lie in 1..={}", g.degree())));
    }
    let subs = g.subdegrees(point - 1).map_err(|e| match e {
        PermError::NotTransitive => CliError::Violation("group is not transitive".into()),
        e => internal(e),
    })?;
    let s: Vec<String> = subs.iter().map(|d| d.to_string()).collect();
    println!("{}", s.join(" "));
    Ok(())
}

pub fn flagtest(group: &Path, design: &Path) -> Result<(), CliError> {
    let g = read_group(group)?;
    let d = read_design(design)?;
    let verdict = match is_flag_transitive(&g, &d) {
        Ok(ft) => ft,
        Err(e @ (DesignError::DegreeMismatch { .. } | DesignError::NotAutomorphism { .. })) => {
            println!("flag-transitive: no ({e})");
            return Err(CliError::Violation("group does not act on the design".into()));
        }
        Err(e) => return Err(internal(e)),
    };
    println!(
        "flag-transitive: {}; primitive: {}",
        if verdict { "yes" } else { "no" },
        primitivity(&g)?
    );
    if verdict {
        Ok(())
    } else {
        Err(CliError::Violation("not flag-transitive".into()))
    }
}

fn elimination_error(e: EliminationError) -> CliError {
    match e {
        EliminationError::UnknownTable(_) => CliError::Usage(e.to_string()),
        EliminationError::Malformed { .. } | EliminationError::Checksum(_) => CliError::Malformed(e.to_string()),
        e => CliError::Violation(e.to_string()),
    }
}

pub fn eliminate_table(selector: &str, jobs: usize, seed: u64) -> Result<(), CliError> {
    if jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    let rows = select_rows(&load_catalog().map_err(elimination_error)?, selector).map_err(elimination_error)?;
    let reports = run_catalog(&rows, jobs, seed, |r| {
        println!("{}", r.human_line());
        println!("{}", r.machine_line());
    })
    .map_err(elimination_error)?;
    let passed = reports.iter().filter(|r| r.status == RowStatus::Pass).count();
    println!("{passed}/{} rows PASS", reports.len());
    if passed == reports.len() {
        Ok(())
    } else {
        Err(CliError::Violation(format!("{} rows did not pass", reports.len() - passed)))
    }
}

pub fn eliminate_one(v: &BigUint, bound: &BigUint, lambda: Option<&BigUint>, seed: u64) -> Result<(), CliError> {
    let pairs = admissible(v, bound, lambda, None, seed).map_err(elimination_error)?;
    if pairs.is_empty() {
        println!("EMPTY");
    } else {
        let p: Vec<String> = pairs.iter().map(|p| p.to_string()).collect();
        println!("{}", p.join(" "));
    }
    Ok(())
}

pub fn families(lambda: u64) -> Result<(), CliError> {
    let tuples = corollary_families(lambda).map_err(|e| CliError::Usage(e.to_string()))?;
    for t in tuples {
        println!("{t}");
    }
    Ok(())
}

pub fn selftest(jobs: usize, seed: u64) -> Result<(), CliError> {
    let results = run_all(jobs.max(1), seed);
    for r in &results {
        println!("{r}");
    }
    let failed: Vec<String> = results.iter().filter(|r| !r.passed).map(|r| r.number.to_string()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Violation(format!("criteria failed: {}", failed.join(", "))))
    }
}
