use crate::error::Error;
use crate::laurent::{embed_u, parse_laurent};
use crate::numfield::{int, QPoly, Rationals};
use crate::parse::Alphabet;
use crate::report::{Check, CheckStatus, Report};
use crate::smith::parse_words;

use super::{BTable, PVSpace};

/// Words whose radial components are compared with the abstract model.
pub const VERIFY_WORDS: &[&str] = &["X", "Y", "X*Y", "Y*X", "Y*X - X*Y", "Y^2", "X^2*Y", "E*X*Y"];

impl PVSpace {
    /// Compares the radial component of `word` with its value in the
    /// Laurent model of `U(Q, ū, d₀)`, both by direct evaluation and through
    /// the `U`-normal form.
    pub fn check_word(&self, word: &str, u: &QPoly, min_powers: usize) -> Check {
        let name = format!("radial:{word}");
        let upres = self.u_presentation(u.clone());
        let radial = match self.radial_component_expr(word, min_powers) {
            Ok(r) => r,
            Err(e) => return Check::new(name, CheckStatus::Fail, e.to_string()),
        };
        let direct = parse_laurent(word, &upres, Alphabet::Operators);
        let via_normal_form = parse_words(word, Rationals, Alphabet::Operators, false)
            .and_then(|w| upres.normalize(&w))
            .map(|nf| embed_u(&nf, &upres));
        match (direct, via_normal_form) {
            (Ok(a), Ok(b)) => {
                let ok = radial == a && radial == b;
                let detail = if ok {
                    radial.to_string()
                } else {
                    format!("weyl {radial} vs model {a} vs normal form {b}")
                };
                Check::from_bool(name, ok, detail)
            }
            (Err(e), _) | (_, Err(e)) => Check::new(name, CheckStatus::Fail, e.to_string()),
        }
    }

    /// Runs the full suite. Failures become report entries.
    pub fn verify(&self, max_power: usize) -> Report {
        let mut report = Report::new(format!("verify {}", self.name));
        report.space = Some(self.name.clone());
        let d0 = int(self.d0 as i64);
        let (x, y, e) = (&self.x, &self.y, &self.e);

        let y_delta = y.apply(&self.delta);
        report.push(Check::from_bool(
            "normalization:Y(delta)=1",
            y_delta.as_constant() == Some(int(1)),
            format!("c = {}", self.y_norm),
        ));
        let ex = e.commutator(x);
        report.push(Check::from_bool("grading:[E,X]=d0*X", ex == x.scale(&d0), format!("d0 = {}", self.d0)));
        let ey = e.commutator(y);
        report.push(Check::from_bool(
            "grading:[E,Y]=-d0*Y",
            ey == y.scale(&-d0.clone()),
            format!("d0 = {}", self.d0),
        ));
        let xy = x.mul(y);
        let yx = y.mul(x);
        let bracket = xy.commutator(&yx);
        report.push(Check::from_bool(
            "commutativity:[XY,YX]=0",
            bracket.is_zero(),
            format!("{} terms", bracket.len()),
        ));
        let xe = x.mul(e);
        let shifted = e.sub(&crate::weyl::WeylOp::scalar(self.nvars(), d0.clone())).mul(x);
        report.push(Check::from_bool("tau:X*E=(E-d0)*X", xe == shifted, ""));

        let table = match self.bfunction(max_power) {
            Ok(t) => {
                report.push(Check::new(
                    "bfunction:proportional",
                    CheckStatus::Pass,
                    format!("k = 0..={max_power}"),
                ));
                t
            }
            Err(err) => {
                report.push(Check::new("bfunction:proportional", CheckStatus::Fail, err.to_string()));
                return report;
            }
        };
        report.values_mut().b = Some(table.to_strings());
        report.push(Check::from_bool(
            "bfunction:b(0)=1",
            table.values[0] == int(1),
            format!("b(0) = {}", table.values[0]),
        ));

        let Some(u) = self.check_u(&table, &mut report) else {
            return report;
        };
        report.values_mut().u = Some(u.to_string());

        let min_powers = max_power + 1;
        for word in VERIFY_WORDS {
            report.push(self.check_word(word, &u, min_powers));
        }
        let f = u.shift(&d0).sub(&u);
        let bracket = self.radial_component_expr("Y*X - X*Y", min_powers);
        let ok = bracket.as_ref().is_ok_and(|r| *r == crate::laurent::LaurentElement::from_e_poly(f.clone()));
        report.push(Check::from_bool("radial:[Y,X]=f(e)", ok, format!("f = {f}")));
        report
    }

    fn check_u(&self, table: &BTable, report: &mut Report) -> Option<QPoly> {
        match self.u_from_table(table) {
            Ok(u) => {
                report.push(Check::new("ufunction:stable", CheckStatus::Pass, format!("u = {u}, u(0) = 0")));
                let status = if u.degree() == Some(self.d0 as usize) {
                    CheckStatus::Pass
                } else if self.catalog {
                    CheckStatus::Fail
                } else {
                    CheckStatus::Flag
                };
                report.push(Check::new("ufunction:degree", status, format!("deg u = {}", degree_label(&u))));
                Some(u)
            }
            Err(err @ Error::DegreeMismatch { .. }) => {
                report.push(Check::new("ufunction:stable", CheckStatus::Pass, ""));
                report.push(Check::new("ufunction:degree", CheckStatus::Fail, err.to_string()));
                None
            }
            Err(err) => {
                report.push(Check::new("ufunction:stable", CheckStatus::Fail, err.to_string()));
                None
            }
        }
    }
}

pub(crate) fn degree_label(u: &QPoly) -> String {
    u.degree().map_or_else(|| "-inf".to_string(), |d| d.to_string())
}
