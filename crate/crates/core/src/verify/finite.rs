//! Finite-dimensional algebras given by structure constants.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linear::{bilinear, LinComb};
use crate::scalar::Scalar;

use super::{AxiomCheck, AxiomReport, Witness};

/// A vector element in the basis `e₀, …, e_{dim−1}`.
pub type Vector = LinComb<usize>;

/// A bracket and a product on a finite basis, each given on basis pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinPostLie {
    dim: usize,
    bracket: Vec<Vec<Vector>>,
    product: Vec<Vec<Vector>>,
}

impl FinPostLie {
    /// All constants zero.
    pub fn new(dim: usize) -> Result<FinPostLie> {
        if dim == 0 {
            return Err(Error::Dimension("dimension must be positive".into()));
        }
        let zero = vec![vec![Vector::zero(); dim]; dim];
        Ok(FinPostLie {
            dim,
            bracket: zero.clone(),
            product: zero,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn check_vector(&self, v: &Vector) -> Result<()> {
        match v.terms().find(|&&k| k >= self.dim) {
            Some(k) => Err(Error::Dimension(format!("index {k} out of range for dimension {}", self.dim))),
            None => Ok(()),
        }
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        if i >= self.dim || j >= self.dim {
            return Err(Error::Dimension(format!("pair ({i},{j}) out of range for dimension {}", self.dim)));
        }
        Ok(())
    }

    /// Sets `[eᵢ, eⱼ]`.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: Vector) -> Result<()> {
        self.check_pair(i, j)?;
        self.check_vector(&v)?;
        self.bracket[i][j] = v;
        Ok(())
    }

    /// Sets `eᵢ * eⱼ`.
    pub fn set_product(&mut self, i: usize, j: usize, v: Vector) -> Result<()> {
        self.check_pair(i, j)?;
        self.check_vector(&v)?;
        self.product[i][j] = v;
        Ok(())
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.bracket[i][j]
    }

    pub fn product_basis(&self, i: usize, j: usize) -> &Vector {
        &self.product[i][j]
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::from_term(i)
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        bilinear(x, y, |&i, &j| self.bracket[i][j].clone())
    }

    pub fn product(&self, x: &Vector, y: &Vector) -> Vector {
        bilinear(x, y, |&i, &j| self.product[i][j].clone())
    }

    /// `a(x,y,z) = (x*y)*z − x*(y*z)`.
    pub fn associator(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        &self.product(&self.product(x, y), z) - &self.product(x, &self.product(y, z))
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.iter().flatten().all(LinComb::is_zero)
    }

    fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.dim;
        (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
    }

    fn check_triples<F>(&self, axiom: &str, residual: F) -> AxiomCheck
    where
        F: Fn(&Vector, &Vector, &Vector) -> Vector,
    {
        let results = self
            .triples()
            .map(|(i, j, k)| {
                let r = residual(&self.basis(i), &self.basis(j), &self.basis(k));
                (!r.is_zero()).then(|| Witness::new(vec![format!("e{i}"), format!("e{j}"), format!("e{k}")], &named(&r)))
            })
            .collect();
        AxiomCheck::from_cases(axiom, results)
    }

    fn lie_checks(&self, report: &mut AxiomReport) {
        let n = self.dim;
        let results = (0..n)
            .flat_map(|i| (i..n).map(move |j| (i, j)))
            .map(|(i, j)| {
                let r = &self.bracket[i][j] + &self.bracket[j][i];
                (!r.is_zero()).then(|| Witness::new(vec![format!("e{i}"), format!("e{j}")], &named(&r)))
            })
            .collect();
        report.push(AxiomCheck::from_cases("antisymmetry [x,y] + [y,x] = 0", results));
        report.push(self.check_triples("Jacobi [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0", |x, y, z| {
            let a = self.bracket(x, &self.bracket(y, z));
            let b = self.bracket(y, &self.bracket(z, x));
            let c = self.bracket(z, &self.bracket(x, y));
            &(&a + &b) + &c
        }));
    }

    // Structured file form.

    pub fn to_file(&self) -> ConstantsFile {
        let entries = |table: &Vec<Vec<Vector>>| {
            let mut out = Vec::new();
            for (i, row) in table.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    for (&k, c) in v.iter() {
                        out.push(ConstantEntry {
                            i,
                            j,
                            k,
                            coeff: c.to_fraction_string(),
                        });
                    }
                }
            }
            out
        };
        ConstantsFile {
            dim: self.dim,
            bracket: entries(&self.bracket),
            product: entries(&self.product),
        }
    }

    /// Builds the algebra from a parsed file; repeated entries add up.
    pub fn from_file(file: &ConstantsFile) -> Result<FinPostLie> {
        let mut a = FinPostLie::new(file.dim)?;
        for (table, entries) in [(&mut a.bracket, &file.bracket), (&mut a.product, &file.product)] {
            for e in entries {
                if e.i >= file.dim || e.j >= file.dim || e.k >= file.dim {
                    return Err(Error::Dimension(format!(
                        "entry ({},{},{}) out of range for dimension {}",
                        e.i, e.j, e.k, file.dim
                    )));
                }
                let c: Scalar = e.coeff.parse()?;
                table[e.i][e.j].add_term(e.k, c);
            }
        }
        Ok(a)
    }

    pub fn from_json_str(src: &str) -> Result<FinPostLie> {
        let file: ConstantsFile = serde_json::from_str(src).map_err(|e| Error::Parse(e.to_string()))?;
        FinPostLie::from_file(&file)
    }

    pub fn from_toml_str(src: &str) -> Result<FinPostLie> {
        let file: ConstantsFile = toml::from_str(src).map_err(|e| Error::Parse(e.to_string()))?;
        FinPostLie::from_file(&file)
    }

    /// Reads a `.toml` file as TOML and anything else as JSON.
    pub fn from_path(path: &Path) -> Result<FinPostLie> {
        let src = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("toml")) {
            FinPostLie::from_toml_str(&src)
        } else {
            FinPostLie::from_json_str(&src)
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("constants serialize")
    }
}

/// `dim`, then `{i, j, k, coeff}` entries meaning `coeff · e_k` in
/// `[eᵢ, eⱼ]` or `eᵢ * eⱼ`. Indices are 0-based; missing entries are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantsFile {
    pub dim: usize,
    #[serde(default)]
    pub bracket: Vec<ConstantEntry>,
    #[serde(default)]
    pub product: Vec<ConstantEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: String,
}

fn named(v: &Vector) -> LinComb<String> {
    v.map_terms(|k| format!("e{k}"))
}

/// Lie axioms and
/// `x*[y,z] = a(x,y,z) − a(x,z,y)`, `[x,y]*z = [x*z, y] + [x, y*z]`.
pub fn check_right_postlie(a: &FinPostLie) -> AxiomReport {
    let mut report = AxiomReport::new(format!("right Post-Lie, dimension {}", a.dim));
    a.lie_checks(&mut report);
    report.push(a.check_triples("x*[y,z] = a(x,y,z) - a(x,z,y)", |x, y, z| {
        let lhs = a.product(x, &a.bracket(y, z));
        let rhs = &a.associator(x, y, z) - &a.associator(x, z, y);
        &lhs - &rhs
    }));
    report.push(a.check_triples("[x,y]*z = [x*z,y] + [x,y*z]", |x, y, z| {
        let lhs = a.product(&a.bracket(x, y), z);
        let rhs = &a.bracket(&a.product(x, z), y) + &a.bracket(x, &a.product(y, z));
        &lhs - &rhs
    }));
    abelian_note(a, &mut report, "right pre-Lie");
    report
}

/// Lie axioms and
/// `x*[y,z] = [x*y, z] + [y, x*z]`, `[x,y]*z = a(y,x,z) − a(x,y,z)`.
pub fn check_left_postlie(a: &FinPostLie) -> AxiomReport {
    let mut report = AxiomReport::new(format!("left Post-Lie, dimension {}", a.dim));
    a.lie_checks(&mut report);
    report.push(a.check_triples("x*[y,z] = [x*y,z] + [y,x*z]", |x, y, z| {
        let lhs = a.product(x, &a.bracket(y, z));
        let rhs = &a.bracket(&a.product(x, y), z) + &a.bracket(y, &a.product(x, z));
        &lhs - &rhs
    }));
    report.push(a.check_triples("[x,y]*z = a(y,x,z) - a(x,y,z)", |x, y, z| {
        let lhs = a.product(&a.bracket(x, y), z);
        let rhs = &a.associator(y, x, z) - &a.associator(x, y, z);
        &lhs - &rhs
    }));
    abelian_note(a, &mut report, "left pre-Lie");
    report
}

/// With an abelian bracket the checks reduce to the pre-Lie identity.
fn abelian_note(a: &FinPostLie, report: &mut AxiomReport, kind: &str) {
    if a.is_abelian() {
        let verdict = if report.passed() { "is" } else { "is not" };
        report.notes.push(format!("bracket is abelian; the product {verdict} {kind}"));
    }
}

/// Negated bracket and swapped product arguments.
pub fn opposite(a: &FinPostLie) -> FinPostLie {
    let n = a.dim;
    let mut out = FinPostLie::new(n).expect("dimension is positive");
    for i in 0..n {
        for j in 0..n {
            out.bracket[i][j] = -a.bracket[i][j].clone();
            out.product[i][j] = a.product[j][i].clone();
        }
    }
    out
}
