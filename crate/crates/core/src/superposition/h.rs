use serde::Serialize;

use super::cylinder::{Codomain, CylinderFunction};
use crate::error::{Error, Result};
use crate::interleave::{deinterleave, interleave, InterleavedPadic};
use crate::padic::{PadicPoint, PadicScalar, TruncatedPadicInt};

/// Placement of the coordinates inside the argument of `h`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum WeightConvention {
    /// `Σ_{k=0}^{n−1} p^k·ω(x_k)`; the argument ranges over all of ℤₚ.
    #[default]
    Unshifted,
    /// `Σ_{k=1}^{n} p^k·ω(x_k)`; the argument ranges over `p·ℤₚ` and carries one extra digit.
    Shifted,
}

/// `h: ℤ/p^(nK) → ℚₚ` with `h(interleave(x)) = f(x)`.
#[derive(Clone, Debug)]
pub struct HFunction {
    p: u32,
    n: usize,
    level: usize,
    /// Indexed by the integer value of the interleaved argument.
    table: Vec<PadicScalar>,
}

pub fn build_h(f: &CylinderFunction) -> Result<HFunction> {
    if f.codomain() != Codomain::Padic {
        return Err(Error::CodomainMismatch {
            expected: "padic",
            found: f.codomain().name(),
        });
    }
    let (p, n, level) = (f.p(), f.arity(), f.level());
    let table = (0..f.point_count())
        .map(|z| {
            let z = TruncatedPadicInt::from_u64_unchecked(z, p, n * level);
            let z = InterleavedPadic::new(z, n).expect("precision is a multiple of n");
            f.eval_padic(&deinterleave(&z))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HFunction { p, n, level, table })
}

impl HFunction {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    /// Per-coordinate level `K`; the argument has `n·K` digits.
    pub fn input_level(&self) -> usize {
        self.level
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// `h(z)` for `z` of precision `n·K`.
    pub fn eval(&self, z: &TruncatedPadicInt) -> Result<&PadicScalar> {
        if z.p() != self.p || z.precision() != self.n * self.level {
            return Err(Error::PrecisionMismatch(
                format!("p={} precision={}", self.p, self.n * self.level),
                format!("p={} precision={}", z.p(), z.precision()),
            ));
        }
        Ok(&self.table[z.to_u64().expect("bounded table") as usize])
    }

    pub fn eval_interleaved(&self, z: &InterleavedPadic) -> Result<&PadicScalar> {
        if z.arity() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: z.arity(),
            });
        }
        self.eval(z.value())
    }

    /// `h` read on `p·ℤₚ`: `z` has precision `n·K+1` and a zero units digit.
    pub fn eval_shifted(&self, z: &TruncatedPadicInt) -> Result<&PadicScalar> {
        if z.precision() != self.n * self.level + 1 {
            return Err(Error::PrecisionMismatch(
                format!("precision={}", self.n * self.level + 1),
                format!("precision={}", z.precision()),
            ));
        }
        if z.digit(0) != 0 {
            return Err(Error::DomainViolation(format!("{z} is not in pZp")));
        }
        let digits = z.digits()[1..].to_vec();
        self.eval(&TruncatedPadicInt::from_digits_unchecked(z.p(), digits))
    }

    /// The argument of `h` for `x` under `weights`.
    pub fn argument(&self, x: &PadicPoint, weights: WeightConvention) -> Result<TruncatedPadicInt> {
        self.check_point(x)?;
        let z = interleave(x).into_value();
        Ok(match weights {
            WeightConvention::Unshifted => z,
            WeightConvention::Shifted => {
                let mut digits = Vec::with_capacity(z.precision() + 1);
                digits.push(0);
                digits.extend_from_slice(z.digits());
                TruncatedPadicInt::from_digits_unchecked(z.p(), digits)
            }
        })
    }

    fn check_point(&self, x: &PadicPoint) -> Result<()> {
        if x.dimension() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.dimension(),
            });
        }
        if x.p() != self.p || x.precision() != self.level {
            return Err(Error::PrecisionMismatch(
                format!("p={} K={}", self.p, self.level),
                format!("p={} K={}", x.p(), x.precision()),
            ));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Entry {
            z: String,
            value: String,
        }
        #[derive(Serialize)]
        struct Out {
            p: u32,
            n: usize,
            #[serde(rename = "K")]
            k: usize,
            table: Vec<Entry>,
        }
        let out = Out {
            p: self.p,
            n: self.n,
            k: self.level,
            table: self
                .table
                .iter()
                .enumerate()
                .map(|(i, v)| Entry {
                    z: TruncatedPadicInt::from_u64_unchecked(i as u64, self.p, self.n * self.level)
                        .to_string(),
                    value: v.to_string(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&out).expect("serializable")
    }
}

/// `h(Σ_k p^k·ω(x_k))`.
pub fn superpose2(h: &HFunction, x: &PadicPoint) -> Result<PadicScalar> {
    superpose2_with(h, x, WeightConvention::Unshifted)
}

pub fn superpose2_with(
    h: &HFunction,
    x: &PadicPoint,
    weights: WeightConvention,
) -> Result<PadicScalar> {
    let z = h.argument(x, weights)?;
    match weights {
        WeightConvention::Unshifted => h.eval(&z).cloned(),
        WeightConvention::Shifted => h.eval_shifted(&z).cloned(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superposition::cylinder::Builtin;

    fn int(v: u64, p: u32, k: usize) -> TruncatedPadicInt {
        TruncatedPadicInt::from_u64(v, p, k).unwrap()
    }

    fn point(values: &[u64], p: u32, k: usize) -> PadicPoint {
        PadicPoint::new(values.iter().map(|&v| int(v, p, k)).collect()).unwrap()
    }

    #[test]
    fn zero_function() {
        let f = CylinderFunction::zero(2, 2, 2, Codomain::Padic).unwrap();
        let h = build_h(&f).unwrap();
        assert_eq!(h.len(), 16);
        for z in 0..16 {
            assert!(h.eval(&int(z, 2, 4)).unwrap().is_zero());
        }
        assert!(superpose2(&h, &point(&[3, 2], 2, 2)).unwrap().is_zero());
    }

    #[test]
    fn padic_sum_example() {
        let f = CylinderFunction::builtin(Builtin::PadicSum, 2, 2, 2).unwrap();
        let h = build_h(&f).unwrap();
        let v = h.eval(&int(3, 2, 4)).unwrap();
        assert_eq!(v.to_padic_int().unwrap().to_u64(), Some(2));
        let v = superpose2(&h, &point(&[1, 1], 2, 2)).unwrap();
        assert_eq!(v.to_padic_int().unwrap().to_u64(), Some(2));
    }

    #[test]
    fn projection_example() {
        let f = CylinderFunction::builtin(Builtin::Projection(0), 2, 2, 2).unwrap();
        let h = build_h(&f).unwrap();
        assert_eq!(h.eval(&int(11, 2, 4)).unwrap().to_padic_int().unwrap().to_u64(), Some(1));
        let v = superpose2(&h, &point(&[1, 3], 2, 2)).unwrap();
        assert_eq!(v.to_padic_int().unwrap().to_u64(), Some(1));
    }

    #[test]
    fn shifted_weights_agree() {
        let f = CylinderFunction::builtin(Builtin::PadicSum, 3, 2, 2).unwrap();
        let h = build_h(&f).unwrap();
        for i in 0..81 {
            let x = PadicPoint::from_index(i, 3, 2, 2).unwrap();
            let z = h.argument(&x, WeightConvention::Shifted).unwrap();
            assert_eq!(z.digit(0), 0);
            assert_eq!(
                superpose2_with(&h, &x, WeightConvention::Shifted).unwrap(),
                f.eval_padic(&x).unwrap()
            );
        }
        assert!(matches!(
            h.eval_shifted(&int(1, 3, 5)),
            Err(Error::DomainViolation(_))
        ));
    }

    #[test]
    fn rejects_mismatched_inputs() {
        let f = CylinderFunction::builtin(Builtin::NormProduct, 2, 2, 2).unwrap();
        assert!(matches!(build_h(&f), Err(Error::CodomainMismatch { .. })));
        let h = build_h(&CylinderFunction::builtin(Builtin::PadicSum, 2, 2, 2).unwrap()).unwrap();
        assert!(matches!(
            superpose2(&h, &point(&[1, 1, 1], 2, 2)),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            superpose2(&h, &point(&[1, 1], 2, 3)),
            Err(Error::PrecisionMismatch(..))
        ));
    }
}
