//! Built-in group constructors and JSON group files.
//!
//! Group file format (`*.group.json`):
//!
//! ```json
//! {"name": "S3", "degree": 3, "generators": [[1,0,2],[1,2,0]], "expected_order": 6}
//! ```
//!
//! Generators are 0-indexed image arrays of length `degree`;
//! `expected_order` is optional and checked exactly when present.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, DEFAULT_MAX_ORDER};
use crate::perm::Permutation;
use crate::primes::is_prime;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSource {
    /// A builtin description such as `dihedral:8` or `dihedral:8*cyclic:3`.
    Builtin(String),
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: String,
    pub source: GroupSource,
    pub expected_order: Option<usize>,
}

impl GroupSpec {
    pub fn builtin(name: &str, description: &str, expected_order: usize) -> Self {
        GroupSpec {
            name: name.to_string(),
            source: GroupSource::Builtin(description.to_string()),
            expected_order: Some(expected_order),
        }
    }

    pub fn file(path: impl Into<PathBuf>) -> Self {
        let path = path.into();
        let name = path
            .file_name()
            .map(|f| {
                f.to_string_lossy()
                    .trim_end_matches(".group.json")
                    .to_string()
            })
            .unwrap_or_default();
        GroupSpec {
            name,
            source: GroupSource::File(path),
            expected_order: None,
        }
    }

    /// Parses the CLI form: `builtin:NAME[:params]` or a file path.
    pub fn parse(arg: &str) -> Self {
        match arg.strip_prefix("builtin:") {
            Some(desc) => GroupSpec {
                name: String::new(),
                source: GroupSource::Builtin(desc.to_string()),
                expected_order: None,
            },
            None => GroupSpec::file(arg),
        }
    }

    pub fn build(&self, max_order: usize) -> Result<FiniteGroup> {
        let group = match &self.source {
            GroupSource::Builtin(desc) => {
                let g = parse_builtin(desc, max_order)?;
                if self.name.is_empty() {
                    g
                } else {
                    g.renamed(&self.name)
                }
            }
            GroupSource::File(path) => load_group_file_capped(path, max_order)?,
        };
        if let Some(expected) = self.expected_order {
            check_order(&group, expected)?;
        }
        Ok(group)
    }
}

impl fmt::Display for GroupSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSource::Builtin(d) => write!(f, "builtin:{d}"),
            GroupSource::File(p) => write!(f, "{}", p.display()),
        }
    }
}

/// The default verification corpus.
pub fn default_catalog() -> Vec<GroupSpec> {
    vec![
        GroupSpec::builtin("C6", "cyclic:6", 6),
        GroupSpec::builtin("C2^3", "elementary_abelian:2:3", 8),
        GroupSpec::builtin("S3", "symmetric:3", 6),
        GroupSpec::builtin("D8", "dihedral:8", 8),
        GroupSpec::builtin("Q8", "dicyclic:2", 8),
        GroupSpec::builtin("D10", "dihedral:10", 10),
        GroupSpec::builtin("A4", "alternating:4", 12),
        GroupSpec::builtin("Dic12", "dicyclic:3", 12),
        GroupSpec::builtin("D12", "dihedral:12", 12),
        GroupSpec::builtin("Q16", "dicyclic:4", 16),
        GroupSpec::builtin("D16", "dihedral:16", 16),
        GroupSpec::builtin("F21", "frobenius_21", 21),
        GroupSpec::builtin("S4", "symmetric:4", 24),
        GroupSpec::builtin("D8xC3", "dihedral:8*cyclic:3", 24),
        GroupSpec::builtin("S3xS3", "symmetric:3*symmetric:3", 36),
        GroupSpec::builtin("A5", "alternating:5", 60),
        GroupSpec::builtin("S5", "symmetric:5", 120),
    ]
}

/// Builds a group from a builtin description: `NAME[:params]`, optionally
/// several joined by `*` for a direct product.
pub fn parse_builtin(desc: &str, max_order: usize) -> Result<FiniteGroup> {
    let mut factors = desc.split('*');
    let first = factors.next().unwrap_or_default();
    let mut group = builtin_single(first, max_order)?;
    for f in factors {
        let next = builtin_single(f, max_order)?;
        group = direct_product_capped(&group, &next, max_order)?;
    }
    Ok(group)
}

fn builtin_single(desc: &str, max_order: usize) -> Result<FiniteGroup> {
    let mut parts = desc.trim().split(':');
    let name = parts.next().unwrap_or_default();
    let params = parts
        .map(|s| {
            s.parse::<usize>().map_err(|_| Error::BadParameters {
                name: name.to_string(),
                reason: format!("`{s}` is not a non-negative integer"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    builtin_capped(name, &params, max_order)
}

pub fn builtin(name: &str, params: &[usize]) -> Result<FiniteGroup> {
    builtin_capped(name, params, DEFAULT_MAX_ORDER)
}

fn builtin_capped(name: &str, params: &[usize], max_order: usize) -> Result<FiniteGroup> {
    let want = |n: usize| -> Result<()> {
        if params.len() != n {
            return Err(Error::BadParameters {
                name: name.to_string(),
                reason: format!("expected {n} parameter(s), got {}", params.len()),
            });
        }
        Ok(())
    };
    match name {
        "cyclic" => {
            want(1)?;
            cyclic_capped(params[0], max_order)
        }
        "dihedral" => {
            want(1)?;
            dihedral_capped(params[0], max_order)
        }
        "dicyclic" => {
            want(1)?;
            dicyclic_capped(params[0], max_order)
        }
        "quaternion" => {
            want(1)?;
            let order = params[0];
            if order < 8 || !order.is_power_of_two() {
                return Err(bad(name, "order must be a power of two, at least 8"));
            }
            dicyclic_capped(order / 4, max_order)
        }
        "symmetric" => {
            want(1)?;
            symmetric_capped(params[0], max_order)
        }
        "alternating" => {
            want(1)?;
            alternating_capped(params[0], max_order)
        }
        "elementary_abelian" => {
            want(2)?;
            elementary_abelian_capped(params[0], params[1], max_order)
        }
        "frobenius_21" => {
            want(0)?;
            frobenius_21()
        }
        other => Err(Error::UnknownBuiltin(other.to_string())),
    }
}

fn bad(name: &str, reason: &str) -> Error {
    Error::BadParameters {
        name: name.to_string(),
        reason: reason.to_string(),
    }
}

fn cycle_perm(degree: usize, cycles: &[Vec<u32>]) -> Permutation {
    let refs: Vec<&[u32]> = cycles.iter().map(Vec::as_slice).collect();
    Permutation::from_cycles(degree, &refs).expect("constructor cycles are disjoint")
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    cyclic_capped(n, DEFAULT_MAX_ORDER)
}

fn cyclic_capped(n: usize, max_order: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(bad("cyclic", "n must be at least 1"));
    }
    let gens = if n == 1 {
        vec![]
    } else {
        vec![cycle_perm(n, &[(0..n as u32).collect()])]
    };
    FiniteGroup::from_generators(format!("C{n}"), n, gens, max_order)
}

/// Dihedral group of the given order `2n`, acting on the `n` vertices of a polygon.
pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    dihedral_capped(order, DEFAULT_MAX_ORDER)
}

fn dihedral_capped(order: usize, max_order: usize) -> Result<FiniteGroup> {
    if order < 6 || !order.is_multiple_of(2) {
        return Err(bad("dihedral", "order must be even and at least 6"));
    }
    let n = order / 2;
    let rotation = cycle_perm(n, &[(0..n as u32).collect()]);
    let reflection_cycles: Vec<Vec<u32>> = (1..n as u32)
        .filter_map(|i| {
            let j = n as u32 - i;
            (i < j).then(|| vec![i, j])
        })
        .collect();
    let reflection = cycle_perm(n, &reflection_cycles);
    FiniteGroup::from_generators(
        format!("D{order}"),
        n,
        vec![rotation, reflection],
        max_order,
    )
}

/// Dicyclic group `⟨a, b | a^{2n} = 1, b² = aⁿ, b⁻¹ab = a⁻¹⟩` of order `4n`,
/// on its right-regular representation. Powers of two give the generalized
/// quaternion groups (`dicyclic(2)` is Q8, `dicyclic(4)` is Q16).
pub fn dicyclic(n: usize) -> Result<FiniteGroup> {
    dicyclic_capped(n, DEFAULT_MAX_ORDER)
}

fn dicyclic_capped(n: usize, max_order: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(bad("dicyclic", "n must be at least 1"));
    }
    let order = 4 * n;
    if order > max_order {
        return Err(Error::OrderCapExceeded { cap: max_order });
    }
    let m = 2 * n;
    // a^i b^j is labelled i + m*j
    let mul = |(i, j): (usize, usize), (k, l): (usize, usize)| -> (usize, usize) {
        if j == 0 {
            ((i + k) % m, l)
        } else if l == 0 {
            ((i + m - k) % m, 1)
        } else {
            // a^i b a^k b = a^{i-k} b² = a^{i-k+n}
            ((i + m - k + n) % m, 0)
        }
    };
    let label = |(i, j): (usize, usize)| (i + m * j) as u32;
    let right_mult = |x: (usize, usize)| {
        let images = (0..order).map(|y| label(mul((y % m, y / m), x))).collect();
        Permutation::from_images(images).expect("regular action is a bijection")
    };
    let name = if order.is_power_of_two() && order >= 8 {
        format!("Q{order}")
    } else {
        format!("Dic{order}")
    };
    FiniteGroup::from_generators(
        name,
        order,
        vec![right_mult((1, 0)), right_mult((0, 1))],
        max_order,
    )
}

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    symmetric_capped(n, DEFAULT_MAX_ORDER)
}

fn symmetric_capped(n: usize, max_order: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(bad("symmetric", "n must be at least 1"));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle_perm(n, &[vec![0, 1]]));
    }
    if n >= 3 {
        gens.push(cycle_perm(n, &[(0..n as u32).collect()]));
    }
    FiniteGroup::from_generators(format!("S{n}"), n, gens, max_order)
}

pub fn alternating(n: usize) -> Result<FiniteGroup> {
    alternating_capped(n, DEFAULT_MAX_ORDER)
}

fn alternating_capped(n: usize, max_order: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(bad("alternating", "n must be at least 1"));
    }
    let gens = (2..n as u32)
        .map(|k| cycle_perm(n, &[vec![0, 1, k]]))
        .collect();
    FiniteGroup::from_generators(format!("A{n}"), n, gens, max_order)
}

/// `(C_p)^k` acting on `k` disjoint blocks of `p` points.
pub fn elementary_abelian(p: usize, k: usize) -> Result<FiniteGroup> {
    elementary_abelian_capped(p, k, DEFAULT_MAX_ORDER)
}

fn elementary_abelian_capped(p: usize, k: usize, max_order: usize) -> Result<FiniteGroup> {
    if !is_prime(p as u64) {
        return Err(bad("elementary_abelian", "p must be prime"));
    }
    if k == 0 {
        return Err(bad("elementary_abelian", "k must be at least 1"));
    }
    let degree = p * k;
    let gens = (0..k)
        .map(|b| {
            let start = (b * p) as u32;
            cycle_perm(degree, &[(start..start + p as u32).collect()])
        })
        .collect();
    FiniteGroup::from_generators(format!("C{p}^{k}"), degree, gens, max_order)
}

/// The nonabelian group of order 21: `x ↦ x + 1` and `x ↦ 2x` on `Z/7`.
pub fn frobenius_21() -> Result<FiniteGroup> {
    let translation = cycle_perm(7, &[(0..7).collect()]);
    let doubling = cycle_perm(7, &[vec![1, 2, 4], vec![3, 6, 5]]);
    FiniteGroup::from_generators("F21", 7, vec![translation, doubling], DEFAULT_MAX_ORDER)
}

/// `A × B` acting on the disjoint union of the two point sets.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    direct_product_capped(a, b, DEFAULT_MAX_ORDER)
}

fn direct_product_capped(
    a: &FiniteGroup,
    b: &FiniteGroup,
    max_order: usize,
) -> Result<FiniteGroup> {
    let id_a = Permutation::identity(a.degree());
    let id_b = Permutation::identity(b.degree());
    let gens = a
        .generators()
        .iter()
        .map(|g| g.direct_sum(&id_b))
        .chain(b.generators().iter().map(|g| id_a.direct_sum(g)))
        .collect();
    FiniteGroup::from_generators(
        format!("{}x{}", a.name(), b.name()),
        a.degree() + b.degree(),
        gens,
        max_order,
    )
}

fn check_order(group: &FiniteGroup, expected: usize) -> Result<()> {
    if group.order() != expected {
        return Err(Error::OrderMismatch {
            name: group.name().to_string(),
            expected,
            actual: group.order(),
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_order: Option<usize>,
}

impl GroupFile {
    pub fn from_group(group: &FiniteGroup) -> Self {
        GroupFile {
            name: group.name().to_string(),
            degree: group.degree(),
            generators: group
                .generators()
                .iter()
                .map(|g| g.images().to_vec())
                .collect(),
            expected_order: Some(group.order()),
        }
    }
}

pub fn load_group_file(path: impl AsRef<Path>) -> Result<FiniteGroup> {
    load_group_file_capped(path.as_ref(), DEFAULT_MAX_ORDER)
}

pub fn load_group_file_capped(path: &Path, max_order: usize) -> Result<FiniteGroup> {
    let text = fs::read_to_string(path)?;
    parse_group_file(&text, path, max_order)
}

pub fn parse_group_file(text: &str, path: &Path, max_order: usize) -> Result<FiniteGroup> {
    let file: GroupFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        path: path.to_path_buf(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let invalid = |message: String| Error::InvalidGroupFile {
        path: path.to_path_buf(),
        message,
    };
    if file.degree == 0 {
        return Err(invalid("degree must be at least 1".into()));
    }
    let mut gens = Vec::with_capacity(file.generators.len());
    for (k, images) in file.generators.iter().enumerate() {
        if images.len() != file.degree {
            return Err(invalid(format!(
                "generators[{k}] has length {}, expected degree {}",
                images.len(),
                file.degree
            )));
        }
        let p = Permutation::from_images(images.clone())
            .map_err(|e| invalid(format!("generators[{k}]: {e}")))?;
        gens.push(p);
    }
    let group = FiniteGroup::from_generators(file.name, file.degree, gens, max_order)?;
    if let Some(expected) = file.expected_order {
        check_order(&group, expected)?;
    }
    Ok(group)
}

/// All `*.group.json` files in a directory, sorted by file name.
pub fn load_catalog_dir(dir: impl AsRef<Path>) -> Result<Vec<GroupSpec>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir.as_ref())?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            p.file_name()
                .is_some_and(|f| f.to_string_lossy().ends_with(".group.json"))
        })
        .collect();
    paths.sort();
    Ok(paths.into_iter().map(GroupSpec::file).collect())
}
