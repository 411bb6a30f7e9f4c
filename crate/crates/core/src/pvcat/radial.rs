use crate::error::{Error, Result};
use crate::laurent::LaurentElement;
use crate::numfield::{int, interpolate, Rationals};
use crate::weyl::WeylOp;

use super::PVSpace;

/// Extra powers of `Δ₀` checked beyond the interpolation points.
const CHECK_POINTS: usize = 2;

impl PVSpace {
    /// The radial component of `op` in the Laurent model: `Σ x^p g_p(e)`
    /// with `op(Δ₀^k) = g_p(k d₀) Δ₀^{k+p}` on each graded piece.
    ///
    /// The coefficient of `Δ₀^{k+p}` is a polynomial in `k` of degree at
    /// most the order of the piece, so `order + 1` powers determine `g_p`;
    /// `min_powers` raises that floor.
    pub fn radial_component(&self, op: &WeylOp, min_powers: usize) -> Result<LaurentElement<Rationals>> {
        let d0 = self.d0 as i64;
        let mut out = LaurentElement::zero(Rationals);
        let pieces = op.graded_pieces();
        let needed = pieces
            .iter()
            .map(|(m, piece)| {
                (piece.order() as usize + 1).max(min_powers) + CHECK_POINTS + (m / d0).max(0) as usize
            })
            .max()
            .unwrap_or(0);
        let powers = self.delta_powers(needed);
        for (grade, piece) in pieces {
            if grade % d0 != 0 {
                return Err(Error::NotRadial(format!("grade {grade} is not a multiple of d0 = {d0}")));
            }
            let p = grade / d0;
            let npts = (piece.order() as usize + 1).max(min_powers);
            let mut points = Vec::with_capacity(npts + CHECK_POINTS);
            for (k, delta_k) in powers.iter().enumerate().take(npts + CHECK_POINTS) {
                let image = piece.apply(delta_k);
                let target = k as i64 + p;
                let c = if target < 0 {
                    if !image.is_zero() {
                        return Err(Error::NotRadial(format!(
                            "nonzero image of delta^{k} in negative degree"
                        )));
                    }
                    int(0)
                } else {
                    image.ratio_to(&powers[target as usize]).ok_or_else(|| {
                        Error::NotRadial(format!("image of delta^{k} is not a multiple of delta^{target}"))
                    })?
                };
                points.push((int(k as i64 * d0), c));
            }
            let g = interpolate(&points[..npts])?;
            if let Some((t, c)) = points[npts..].iter().find(|(t, c)| g.eval(t) != *c) {
                return Err(Error::NotRadial(format!(
                    "coefficients are not polynomial at e = {t} (value {c})"
                )));
            }
            out.add_piece(p, g);
        }
        Ok(out)
    }

    pub fn radial_component_expr(&self, text: &str, min_powers: usize) -> Result<LaurentElement<Rationals>> {
        self.radial_component(&self.eval_operator(text)?, min_powers)
    }
}
