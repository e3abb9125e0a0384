//! Explicit surfaces with automorphisms: invariance, exact order, discriminant.

pub mod catalog;
pub mod poly;
pub mod ring;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use catalog::{
    catalog, reduction_compatible, sweep_characteristics, verify_all, verify_entry, CatalogEntry, Check, CheckStatus,
    Expectation, VerificationReport, VerificationSummary,
};
pub use poly::{parse_equation, parse_poly, Poly};
pub use ring::{CoefficientRing, RingElem};

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "error", content = "detail", rename_all = "snake_case")]
pub enum ModelError {
    #[error("bad coefficient ring: {0}")]
    BadRing(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("variable mismatch: {0}")]
    VariableMismatch(String),
    #[error("not invariant; difference has leading term {0}")]
    NotInvariant(String),
    #[error("order mismatch: found {found:?}, declared {declared}")]
    OrderMismatch { found: Option<u64>, declared: u64 },
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    #[error("unknown catalog entry {0}")]
    UnknownEntry(String),
    #[error("{id} is not admissible in characteristic {characteristic}")]
    CharacteristicNotAdmissible { id: String, characteristic: u64 },
    #[error("catalog: {0}")]
    Catalog(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    Weierstrass,
    DoublePlane,
    WeightedHypersurface,
}

impl ModelKind {
    /// Projective kinds compare maps up to the weighted scalar action.
    pub fn is_projective(self) -> bool {
        !matches!(self, ModelKind::Weierstrass)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceModel {
    pub id: String,
    pub kind: ModelKind,
    pub weights: Vec<u32>,
    pub equation: Poly,
}

impl SurfaceModel {
    pub fn new(id: &str, kind: ModelKind, weights: Vec<u32>, equation: Poly) -> Result<Self, ModelError> {
        if equation.is_zero() {
            return Err(ModelError::UnsupportedShape("equation is zero".into()));
        }
        if weights.len() != equation.vars().len() {
            return Err(ModelError::VariableMismatch("one weight per variable".into()));
        }
        if kind.is_projective() && equation.weighted_degrees(&weights).len() != 1 {
            return Err(ModelError::UnsupportedShape(
                "equation is not weighted homogeneous".into(),
            ));
        }
        Ok(Self {
            id: id.to_string(),
            kind,
            weights,
            equation,
        })
    }

    pub fn ring(&self) -> &CoefficientRing {
        self.equation.ring()
    }

    pub fn vars(&self) -> &[String] {
        self.equation.vars()
    }

    pub fn reduce_to(&self, p: u64) -> Result<SurfaceModel, ModelError> {
        Ok(SurfaceModel {
            equation: self.equation.reduce_to(p)?,
            ..self.clone()
        })
    }
}

/// A substitution `variable -> image`, each image `c * monomial` or affine-linear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutoMap {
    pub images: Vec<Poly>,
    pub declared_order: u64,
}

impl AutoMap {
    pub fn new(images: Vec<Poly>, declared_order: u64) -> Result<Self, ModelError> {
        let Some(first) = images.first() else {
            return Err(ModelError::VariableMismatch("empty map".into()));
        };
        let (ring, vars) = (first.ring().clone(), first.vars().to_vec());
        for (i, f) in images.iter().enumerate() {
            if f.vars() != vars.as_slice() || f.ring() != &ring {
                return Err(ModelError::VariableMismatch(format!("image of {}", vars[i])));
            }
            let monomial = f.terms().len() == 1;
            if !(monomial || f.degree().is_some_and(|d| d <= 1)) {
                return Err(ModelError::UnsupportedShape(format!("image of {} is {f}", vars[i])));
            }
        }
        if images.len() != vars.len() {
            return Err(ModelError::VariableMismatch("one image per variable".into()));
        }
        let g = Self { images, declared_order };
        g.check_invertible()?;
        Ok(g)
    }

    pub fn identity(ring: &CoefficientRing, vars: &[String]) -> Self {
        let images = (0..vars.len()).map(|i| Poly::var(ring, vars, i)).collect();
        Self {
            images,
            declared_order: 1,
        }
    }

    fn ring(&self) -> &CoefficientRing {
        self.images[0].ring()
    }

    fn vars(&self) -> &[String] {
        self.images[0].vars()
    }

    /// The linear part must have a determinant of finite multiplicative order.
    fn check_invertible(&self) -> Result<(), ModelError> {
        let n = self.vars().len();
        let linear = self.images.iter().all(|f| f.degree().is_some_and(|d| d <= 1));
        if !linear {
            return Ok(());
        }
        let r = self.ring();
        let mut m: Vec<Vec<RingElem>> = vec![vec![r.zero(); n]; n];
        for (i, f) in self.images.iter().enumerate() {
            for (j, row) in m[i].iter_mut().enumerate() {
                let mut e = vec![0; n];
                e[j] = 1;
                if let Some(c) = f.coefficient(&e) {
                    *row = c.clone();
                }
            }
        }
        let det = determinant(r, &m);
        let bound = 2 * r.order() * r.characteristic().max(2);
        if det.is_zero() || r.multiplicative_order(&det, bound).is_none() {
            return Err(ModelError::UnsupportedShape(format!(
                "linear part is not invertible, det = {}",
                r.show(&det)
            )));
        }
        Ok(())
    }

    pub fn compose(&self, inner: &AutoMap) -> AutoMap {
        let images = self.images.iter().map(|f| f.substitute(&inner.images)).collect();
        AutoMap {
            images,
            declared_order: self.declared_order,
        }
    }

    /// Whether every image is `c_i * x_i`, with `c_i = λ^w_i` when `weights` is given.
    fn is_identity(&self, weights: Option<&[u32]>) -> bool {
        let r = self.ring();
        let mut scalars = Vec::new();
        for (i, f) in self.images.iter().enumerate() {
            let mut e = vec![0; self.vars().len()];
            e[i] = 1;
            match (f.terms().len(), f.coefficient(&e)) {
                (1, Some(c)) => scalars.push(c.clone()),
                _ => return false,
            }
        }
        match weights {
            None => scalars.iter().all(|c| *c == r.one()),
            Some(w) => {
                let lambda = w
                    .iter()
                    .position(|&wi| wi == 1)
                    .map_or_else(|| r.one(), |j| scalars[j].clone());
                scalars.iter().zip(w).all(|(c, &wi)| *c == r.pow(&lambda, wi as u64))
            }
        }
    }
}

fn determinant(r: &CoefficientRing, m: &[Vec<RingElem>]) -> RingElem {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = r.zero();
    for j in 0..n {
        let minor: Vec<Vec<RingElem>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, c)| c.clone())
                    .collect()
            })
            .collect();
        let t = r.mul(&m[0][j], &determinant(r, &minor));
        acc = if j % 2 == 0 { r.add(&acc, &t) } else { r.sub(&acc, &t) };
    }
    acc
}

pub fn apply_map(eq: &Poly, g: &AutoMap) -> Result<Poly, ModelError> {
    if eq.vars() != g.vars() {
        return Err(ModelError::VariableMismatch(format!(
            "{:?} vs {:?}",
            eq.vars(),
            g.vars()
        )));
    }
    if eq.ring() != g.ring() {
        return Err(ModelError::BadRing("equation and map over different rings".into()));
    }
    Ok(eq.substitute(&g.images))
}

/// The unit `λ` with `g(eq) = λ * eq`.
pub fn invariance_scalar(model: &SurfaceModel, g: &AutoMap) -> Result<RingElem, ModelError> {
    let eq = &model.equation;
    let image = apply_map(eq, g)?;
    let r = model.ring();
    let pivot = eq
        .terms()
        .iter()
        .rev()
        .find_map(|(e, c)| r.constant_inverse(c).map(|inv| (e.clone(), inv)));
    let Some((e, inv)) = pivot else {
        return Err(ModelError::UnsupportedShape("no term with a unit coefficient".into()));
    };
    let lambda = r.mul(image.coefficient(&e).unwrap_or(&r.zero()), &inv);
    let diff = image.sub(&eq.scale(&lambda));
    match diff.leading_term() {
        None => Ok(lambda),
        Some((e, c)) => Err(ModelError::NotInvariant(format!(
            "{}*{}",
            r.show(&c),
            diff.show_monomial(&e)
        ))),
    }
}

/// Exact order by repeated composition, compared with the declared order.
pub fn map_order(g: &AutoMap, kind: ModelKind, weights: &[u32]) -> Result<u64, ModelError> {
    let w = kind.is_projective().then_some(weights);
    let bound = 2 * g.declared_order.max(132);
    let mut acc = g.clone();
    let mut found = None;
    for k in 1..=bound {
        if acc.is_identity(w) {
            found = Some(k);
            break;
        }
        acc = acc.compose(g);
    }
    match found {
        Some(k) if k == g.declared_order => Ok(k),
        _ => Err(ModelError::OrderMismatch {
            found,
            declared: g.declared_order,
        }),
    }
}

/// `Δ(t)` of `y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6`, after scaling
/// `y^2` to 1 and replacing `x` by `-x` when the cubic term has the wrong sign.
pub fn weierstrass_discriminant(model: &SurfaceModel) -> Result<Poly, ModelError> {
    let r = model.ring();
    if model.kind != ModelKind::Weierstrass {
        return Err(ModelError::UnsupportedShape("not a Weierstrass model".into()));
    }
    if matches!(r.characteristic(), 2 | 3) {
        return Err(ModelError::UnsupportedShape(format!(
            "characteristic {}",
            r.characteristic()
        )));
    }
    let vars = model.vars();
    let idx = |name: &str| vars.iter().position(|v| v == name);
    let (Some(it), Some(ix), Some(iy)) = (idx("t"), idx("x"), idx("y")) else {
        return Err(ModelError::UnsupportedShape(
            "Weierstrass variables must be t, x, y".into(),
        ));
    };
    let mono = |a: u32, b: u32, c: u32| {
        let mut e = vec![0; vars.len()];
        e[it] = a;
        e[ix] = b;
        e[iy] = c;
        e
    };
    let mut f = model.equation.clone();
    let cy = f.coefficient(&mono(0, 0, 2)).cloned().unwrap_or_else(|| r.zero());
    let inv = r
        .constant_inverse(&cy)
        .ok_or_else(|| ModelError::UnsupportedShape("y^2 coefficient is not a unit".into()))?;
    f = f.scale(&inv);
    let cx = f.coefficient(&mono(0, 3, 0)).cloned().unwrap_or_else(|| r.zero());
    if cx == r.one() {
        let mut images: Vec<Poly> = (0..vars.len()).map(|i| Poly::var(r, vars, i)).collect();
        images[ix] = images[ix].neg();
        f = f.substitute(&images);
    } else if cx != r.int(-1) {
        return Err(ModelError::UnsupportedShape("x^3 coefficient must be a sign".into()));
    }
    let tv = vec!["t".to_string()];
    let mut a = vec![Poly::zero(r, &tv); 7];
    for (e, c) in f.terms() {
        let tpow = {
            let mut m = Poly::constant(r, &tv, c.clone());
            m = m.mul(&Poly::var(r, &tv, 0).pow(e[it]));
            m
        };
        let others = e
            .iter()
            .enumerate()
            .any(|(i, &k)| k > 0 && i != it && i != ix && i != iy);
        let slot = match (e[ix], e[iy]) {
            _ if others => None,
            (0, 2) | (3, 0) if e[it] == 0 => continue,
            (1, 1) => Some((1, false)),
            (0, 1) => Some((3, false)),
            (2, 0) => Some((2, true)),
            (1, 0) => Some((4, true)),
            (0, 0) => Some((6, true)),
            _ => None,
        };
        let Some((i, negate)) = slot else {
            return Err(ModelError::UnsupportedShape(format!("term {}", f.show_monomial(e))));
        };
        a[i] = a[i].add(&if negate { tpow.neg() } else { tpow });
    }
    let k = |n: i64| Poly::constant(r, &tv, r.int(n));
    let (a1, a2, a3, a4, a6) = (&a[1], &a[2], &a[3], &a[4], &a[6]);
    let b2 = a1.mul(a1).add(&k(4).mul(a2));
    let b4 = k(2).mul(a4).add(&a1.mul(a3));
    let b6 = a3.mul(a3).add(&k(4).mul(a6));
    let b8 = a1
        .mul(a1)
        .mul(a6)
        .add(&k(4).mul(a2).mul(a6))
        .sub(&a1.mul(a3).mul(a4))
        .add(&a2.mul(a3).mul(a3))
        .sub(&a4.mul(a4));
    let delta = b2
        .mul(&b2)
        .mul(&b8)
        .neg()
        .sub(&k(8).mul(&b4.pow(3)))
        .sub(&k(27).mul(&b6.mul(&b6)))
        .add(&k(9).mul(&b2).mul(&b4).mul(&b6));
    Ok(delta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tvars() -> Vec<String> {
        ["t", "x", "y"].iter().map(|s| s.to_string()).collect()
    }

    fn model(eq: &str, n: u64, p: u64) -> SurfaceModel {
        let r = CoefficientRing::new(n, p).unwrap();
        let f = parse_equation(eq, &r, &tvars()).unwrap();
        SurfaceModel::new("test", ModelKind::Weierstrass, vec![1, 1, 1], f).unwrap()
    }

    fn map(m: &SurfaceModel, images: [&str; 3], order: u64) -> AutoMap {
        let imgs = images
            .iter()
            .map(|s| parse_poly(s, m.ring(), m.vars()).unwrap())
            .collect();
        AutoMap::new(imgs, order).unwrap()
    }

    #[test]
    fn x66_scalar_and_order() {
        let m = model("y^2 = x^3 + t*(t^11 - 1)", 66, 0);
        let g = map(&m, ["zeta^54*t", "zeta^40*x", "zeta^27*y"], 66);
        let lambda = invariance_scalar(&m, &g).unwrap();
        assert_eq!(lambda, m.ring().zeta_pow(54));
        assert_eq!(map_order(&g, m.kind, &m.weights), Ok(66));
        let id = AutoMap::identity(m.ring(), m.vars());
        assert_eq!(invariance_scalar(&m, &id).unwrap(), m.ring().one());
        assert_eq!(apply_map(&m.equation, &id).unwrap(), m.equation);
        let bad = map(&m, ["zeta^54*t", "zeta^40*x", "zeta^28*y"], 66);
        assert!(matches!(invariance_scalar(&m, &bad), Err(ModelError::NotInvariant(_))));
    }

    #[test]
    fn wild_shift_in_char_11() {
        let m = model("y^2 + x^3 + t^11 - t", 1, 11);
        let g = map(&m, ["t + 1", "x", "-y"], 22);
        assert_eq!(apply_map(&m.equation, &g).unwrap(), m.equation);
        assert_eq!(map_order(&g, m.kind, &m.weights), Ok(22));
    }

    #[test]
    fn discriminants() {
        let m = model("y^2 = x^3 + t^12 - t", 1, 0);
        let tv = vec!["t".to_string()];
        let want = parse_poly("-432*(t^12 - t)^2", m.ring(), &tv).unwrap();
        assert_eq!(weierstrass_discriminant(&m).unwrap(), want);
        let m = model("y^2 = x^3 + x + t^7", 1, 0);
        let want = parse_poly("-16*(4 + 27*t^14)", m.ring(), &tv).unwrap();
        assert_eq!(weierstrass_discriminant(&m).unwrap(), want);
        assert!(weierstrass_discriminant(&model("y^2 = x^3", 1, 0)).unwrap().is_zero());
        assert!(matches!(
            weierstrass_discriminant(&model("y^2 + t^6*y = x^3 + t", 1, 2)),
            Err(ModelError::UnsupportedShape(_))
        ));
        // Sign-normalized form y^2 = x^3 - x^2 - B.
        let m = model("y^2 + x^3 + x^2 + t^11 - t", 1, 11);
        assert!(!weierstrass_discriminant(&m).unwrap().is_zero());
    }

    #[test]
    fn order_mismatch() {
        let m = model("y^2 = x^3 + t*(t^11 - 1)", 66, 0);
        let g = map(&m, ["zeta^54*t", "zeta^40*x", "zeta^27*y"], 33);
        assert_eq!(
            map_order(&g, m.kind, &m.weights),
            Err(ModelError::OrderMismatch {
                found: Some(66),
                declared: 33
            })
        );
    }
}
