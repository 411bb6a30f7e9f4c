//! Catalog of multiplicity-free spaces with a one-dimensional quotient and
//! the computations tying the concrete operators `X = Δ₀(x)`,
//! `Y = Δ₀(∂)` (normalized) and the Euler operator `E` to the abstract
//! algebras: b-functions, `ū`, radial components and the verification
//! suite.

mod catalog;
mod radial;
mod verify;

use std::path::Path;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numfield::{int, interpolate, QPoly, Rationals, Scalar, SparsePoly};
use crate::parse::{parse_expr, parse_poly, Alphabet, ExprAlgebra};
use crate::smith::UPresentation;
use crate::weyl::{lie_closure_dims, WeylOp};

pub use catalog::{catalog_listing, catalog_names};
pub use verify::VERIFY_WORDS;

/// A space `(G, V)` given through its fundamental invariant `Δ₀`, with the
/// derived operators.
#[derive(Clone, Debug)]
pub struct PVSpace {
    pub name: String,
    pub vars: Vec<String>,
    pub delta: SparsePoly,
    pub d0: u32,
    /// Multiplication by `Δ₀`.
    pub x: WeylOp,
    /// `Δ₀(∂) / c`, normalized so that `Y Δ₀ = 1`.
    pub y: WeylOp,
    /// `Σ xᵢ ∂ᵢ`.
    pub e: WeylOp,
    /// The normalization constant `c = Σ_α c_α² α!`.
    pub y_norm: Scalar,
    /// Built-in catalog entry (degree expectations are enforced).
    pub catalog: bool,
}

/// Values `b(0..=K)` with `Y Δ₀^{k+1} = b(k) Δ₀^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BTable {
    pub values: Vec<Scalar>,
}

impl BTable {
    pub fn max_power(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.values.iter().map(Scalar::to_string).collect()
    }
}

impl PVSpace {
    pub fn new(name: &str, vars: Vec<String>, delta: SparsePoly, catalog: bool) -> Result<Self> {
        if delta.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if delta.nvars() != vars.len() {
            return Err(Error::VariableCount { left: vars.len(), right: delta.nvars() });
        }
        let d0 = delta.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        if d0 == 0 {
            return Err(Error::SpaceDefinition("delta must have positive degree".into()));
        }
        let n = vars.len();
        let y_norm = delta
            .terms()
            .map(|(a, c)| c * c * Scalar::from_integer(a.factorial()))
            .fold(Scalar::zero(), |acc, v| acc + v);
        let y = WeylOp::from_poly_in_d(&delta).scale(&(Scalar::one() / &y_norm));
        Ok(PVSpace {
            name: name.to_string(),
            x: WeylOp::from_poly(&delta),
            y,
            e: WeylOp::euler(n),
            vars,
            delta,
            d0,
            y_norm,
            catalog,
        })
    }

    /// A built-in space by name.
    pub fn builtin(name: &str) -> Result<Self> {
        let (name, vars, delta, _) = catalog::CATALOG
            .iter()
            .find(|(n, ..)| *n == name)
            .ok_or_else(|| Error::UnknownSpace(name.to_string()))?;
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let delta = parse_poly(delta, &vars)?;
        Self::new(name, vars, delta, true)
    }

    /// Parses the line-oriented definition format:
    ///
    /// ```text
    /// name = reducible
    /// vars = x, y
    /// delta = x^2*y
    /// ```
    pub fn from_definition(text: &str) -> Result<Self> {
        let (mut name, mut vars, mut delta) = (None, None, None);
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::SpaceDefinition(format!("line {}: expected `key = value`", lineno + 1)));
            };
            let value = value.trim().to_string();
            match key.trim() {
                "name" => name = Some(value),
                "vars" => vars = Some(value.split(',').map(|v| v.trim().to_string()).collect::<Vec<_>>()),
                "delta" => delta = Some(value),
                other => {
                    return Err(Error::SpaceDefinition(format!("line {}: unknown key `{other}`", lineno + 1)))
                }
            }
        }
        let missing = |k: &str| Error::SpaceDefinition(format!("missing `{k}`"));
        let name = name.ok_or_else(|| missing("name"))?;
        let vars = vars.ok_or_else(|| missing("vars"))?;
        if vars.iter().any(|v| v.is_empty()) {
            return Err(Error::SpaceDefinition("empty variable name".into()));
        }
        let delta = parse_poly(&delta.ok_or_else(|| missing("delta"))?, &vars)?;
        Self::new(&name, vars, delta, false)
    }

    /// A catalog name, or else a path to a definition file.
    pub fn load(source: &str) -> Result<Self> {
        if catalog_names().contains(&source) {
            return Self::builtin(source);
        }
        let path = Path::new(source);
        if path.is_file() {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::SpaceDefinition(format!("{source}: {e}")))?;
            return Self::from_definition(&text);
        }
        Err(Error::UnknownSpace(source.to_string()))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Default largest power for the verification suites.
    pub fn default_max_power(&self) -> usize {
        self.d0 as usize + 3
    }

    /// `Δ₀^0, …, Δ₀^count-1`
    pub fn delta_powers(&self, count: usize) -> Vec<SparsePoly> {
        let mut out = Vec::with_capacity(count);
        let mut acc = SparsePoly::one(self.nvars());
        for _ in 0..count {
            let next = &acc * &self.delta;
            out.push(acc);
            acc = next;
        }
        out
    }

    /// `b(k)` for `k = 0..=max_power`, each verified term by term.
    pub fn bfunction(&self, max_power: usize) -> Result<BTable> {
        let min = self.d0 as usize + 2;
        if max_power < min {
            return Err(Error::Usage(format!("max power must be at least d0 + 2 = {min}")));
        }
        let powers = self.delta_powers(max_power + 2);
        let mut values = Vec::with_capacity(max_power + 1);
        for k in 0..=max_power {
            let image = self.y.apply(&powers[k + 1]);
            let b = image.ratio_to(&powers[k]).ok_or(Error::NotProportional { k })?;
            values.push(b);
        }
        Ok(BTable { values })
    }

    /// Interpolates `ū` through `(d₀(k+1), b(k))` for `k = 0..=d₀` and
    /// checks the remaining table entries and `ū(0) = 0`. Catalog spaces
    /// additionally require `deg ū = d₀`.
    pub fn u_from_table(&self, table: &BTable) -> Result<QPoly> {
        let d0 = self.d0 as usize;
        let point = |k: usize| (int(((k + 1) * d0) as i64), table.values[k].clone());
        if table.values.len() < d0 + 2 {
            return Err(Error::Usage(format!("need b(0..={}) to check stability", d0 + 1)));
        }
        let u = interpolate(&(0..=d0).map(point).collect::<Vec<_>>())?;
        for k in d0 + 1..table.values.len() {
            let (t, b) = point(k);
            if u.eval(&t) != b {
                return Err(Error::Unstable(format!(
                    "interpolant {u} predicts {} at k = {k}, table has {b}",
                    u.eval(&t)
                )));
            }
        }
        if !u.coeff(0).is_zero() {
            return Err(Error::Unstable(format!("u(0) = {} is not zero", u.coeff(0))));
        }
        if self.catalog && u.degree() != Some(d0) {
            return Err(Error::DegreeMismatch { found: u.degree().map_or(-1, |d| d as i64), expected: d0 });
        }
        Ok(u)
    }

    pub fn u_polynomial(&self, max_power: usize) -> Result<QPoly> {
        self.u_from_table(&self.bfunction(max_power)?)
    }

    /// The abstract counterpart `U(Q, ū, d₀)`.
    pub fn u_presentation(&self, u: QPoly) -> UPresentation<Rationals> {
        UPresentation::new(u, self.d0).expect("d0 >= 1")
    }

    /// Evaluates an expression over `X`, `Y`, `E` to a Weyl operator.
    pub fn eval_operator(&self, text: &str) -> Result<WeylOp> {
        parse_expr(text)?.eval(&OperatorAlgebra { space: self })
    }

    /// Lie-closure dimensions of `{X, Y}`.
    pub fn igusa_closure(&self, depth: usize) -> Result<Vec<usize>> {
        if depth == 0 {
            return Err(Error::Usage("depth must be at least 1".into()));
        }
        Ok(lie_closure_dims(&[self.x.clone(), self.y.clone()], depth))
    }

    pub fn delta_display(&self) -> String {
        self.delta.display_with(&self.vars)
    }
}

/// `X`, `Y`, `E` as Weyl operators of a space.
pub struct OperatorAlgebra<'a> {
    pub space: &'a PVSpace,
}

impl ExprAlgebra for OperatorAlgebra<'_> {
    type Value = WeylOp;

    fn constant(&self, q: &Scalar) -> WeylOp {
        WeylOp::scalar(self.space.nvars(), q.clone())
    }
    fn generator(&self, name: &str) -> Option<WeylOp> {
        let [x, y, e] = Alphabet::Operators.generators();
        match name {
            n if n == x => Some(self.space.x.clone()),
            n if n == y => Some(self.space.y.clone()),
            n if n == e => Some(self.space.e.clone()),
            _ => None,
        }
    }
    fn add(&self, a: &WeylOp, b: &WeylOp) -> WeylOp {
        a.add(b)
    }
    fn neg(&self, a: &WeylOp) -> WeylOp {
        a.neg()
    }
    fn mul(&self, a: &WeylOp, b: &WeylOp) -> WeylOp {
        a.mul(b)
    }
}
