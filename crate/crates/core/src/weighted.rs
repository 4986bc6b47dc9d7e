//! Weighted generalized inverses and the EP-style classes of a pair `(a, w)`.
//!
//! All five classifiers share one strategy: build the canonical candidate
//! witness from a closed formula, then verify the defining equations
//! exactly. Nonexistence is reported when no candidate can be built or when
//! verification fails; it is a value-level outcome, never an error.
//!
//! The classes, in increasing generality:
//!
//! * weighted group invertible: some `x` with `awxwa = a`, `xwawx = x`,
//!   `awx = xwa`;
//! * weighted EP: additionally `awxw` and `xwaw` are Hermitian
//!   (equivalently `a(wx)^2 = x`, `x(wa)^2 = a`, plus the two star
//!   conditions);
//! * weighted Drazin invertible: `awx = xwa`, `xwawx = x`, and `a - awxwa`
//!   nilpotent;
//! * generalized weighted EP: the eventual version of weighted EP, where
//!   `x(wa)^2 = a` is relaxed to `(aw)^m = xw(aw)^{m+1}` for the index `m`
//!   of `aw`;
//! * weighted star-DMP: the same data with the least such power recorded.
//!   In finite dimension this class coincides with the previous one, and
//!   the implementation asserts that coincidence.
//!
//! Note on the Drazin-style nilpotency condition: the test applied here is
//! on `a - awxwa` itself, not on `(a - awxwa)w`. The second reading holds
//! automatically for every matrix pair (the residual times `w` is the
//! nilpotent part of `aw`), while the first genuinely fails on pairs such
//! as `a = I, w = 0` or `a = diag(1,0)` with `w` the basis swap.
//! [`w_drazin_readings_disagree`] flags instances where the readings split.

use crate::error::Error;
use crate::ginv::{drazin, group_inverse};
use crate::matrix::GMat;
use serde::{Deserialize, Serialize};

/// A matrix together with its weight, both square of the same dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPair", into = "RawPair")]
pub struct WPair {
    a: GMat,
    w: GMat,
}

#[derive(Serialize, Deserialize)]
struct RawPair {
    a: GMat,
    w: GMat,
}

impl TryFrom<RawPair> for WPair {
    type Error = Error;
    fn try_from(raw: RawPair) -> Result<Self, Error> {
        WPair::new(raw.a, raw.w)
    }
}

impl From<WPair> for RawPair {
    fn from(p: WPair) -> RawPair {
        RawPair { a: p.a, w: p.w }
    }
}

impl WPair {
    pub fn new(a: GMat, w: GMat) -> Result<Self, Error> {
        if a.n() != w.n() {
            return Err(Error::PairDimension { a: a.n(), w: w.n() });
        }
        Ok(WPair { a, w })
    }

    pub fn a(&self) -> &GMat {
        &self.a
    }

    pub fn w(&self) -> &GMat {
        &self.w
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    /// The product `a w`, the pivot of every weighted construction.
    pub fn aw(&self) -> GMat {
        &self.a * &self.w
    }
}

/// Which weighted inverse a report describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InverseKind {
    #[serde(rename = "w-group")]
    WGroup,
    #[serde(rename = "w-drazin")]
    WDrazin,
    #[serde(rename = "w-ep")]
    WEp,
    #[serde(rename = "gen-w-ep")]
    GenWEp,
    #[serde(rename = "w-star-dmp")]
    WStarDmp,
}

impl InverseKind {
    pub fn as_str(self) -> &'static str {
        match self {
            InverseKind::WGroup => "w-group",
            InverseKind::WDrazin => "w-drazin",
            InverseKind::WEp => "w-ep",
            InverseKind::GenWEp => "gen-w-ep",
            InverseKind::WStarDmp => "w-star-dmp",
        }
    }
}

/// Outcome of one classifier. `x` is present exactly when `exists` is true,
/// and then every listed axiom holds. When a candidate witness could be
/// built but failed verification, the axiom list records which equations
/// broke; when no candidate exists the list is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WInverseReport {
    pub kind: InverseKind,
    pub exists: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub x: Option<GMat>,
    pub verified_axioms: Vec<(String, bool)>,
    /// Least `n >= 1` with `(aw)^n = xw(aw)^{n+1}`; recorded by the
    /// star-DMP classifier only.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub min_power: Option<usize>,
}

impl WInverseReport {
    fn absent(kind: InverseKind) -> Self {
        WInverseReport {
            kind,
            exists: false,
            x: None,
            verified_axioms: Vec::new(),
            min_power: None,
        }
    }

    fn from_axioms(kind: InverseKind, x: GMat, axioms: Vec<(String, bool)>) -> Self {
        let exists = axioms.iter().all(|(_, ok)| *ok);
        WInverseReport {
            kind,
            exists,
            x: exists.then_some(x),
            verified_axioms: axioms,
            min_power: None,
        }
    }
}

pub(crate) fn chain(ms: &[&GMat]) -> GMat {
    let mut it = ms.iter();
    let mut acc = (*it.next().expect("nonempty product")).clone();
    for m in it {
        acc = &acc * *m;
    }
    acc
}

/// Canonical weighted group candidate `((aw)^#)^2 a`, when `aw` is group
/// invertible. Any weighted group inverse has `xw = (aw)^#`, so this is
/// the only possible witness.
pub(crate) fn w_group_candidate(p: &WPair) -> Option<GMat> {
    let g = group_inverse(&p.aw())?;
    Some(chain(&[&g, &g, p.a()]))
}

/// Weighted group inverse: `awxwa = a`, `xwawx = x`, `awx = xwa`.
pub fn w_group(p: &WPair) -> WInverseReport {
    let Some(x) = w_group_candidate(p) else {
        return WInverseReport::absent(InverseKind::WGroup);
    };
    let (a, w) = (p.a(), p.w());
    let axioms = vec![
        ("awxwa=a".to_string(), chain(&[a, w, &x, w, a]) == *a),
        ("xwawx=x".to_string(), chain(&[&x, w, a, w, &x]) == x),
        ("awx=xwa".to_string(), chain(&[a, w, &x]) == chain(&[&x, w, a])),
    ];
    WInverseReport::from_axioms(InverseKind::WGroup, x, axioms)
}

/// Canonical weighted Drazin candidate `((aw)^D)^2 a`. Always defined.
pub(crate) fn w_drazin_candidate(p: &WPair) -> GMat {
    let d = drazin(&p.aw()).d;
    chain(&[&d, &d, p.a()])
}

/// Weighted Drazin inverse: `awx = xwa`, `xwawx = x`, and `a - awxwa`
/// nilpotent. See the module notes for the reading of the last condition.
pub fn w_drazin(p: &WPair) -> WInverseReport {
    let x = w_drazin_candidate(p);
    let (a, w) = (p.a(), p.w());
    let axioms = vec![
        ("awx=xwa".to_string(), chain(&[a, w, &x]) == chain(&[&x, w, a])),
        ("xwawx=x".to_string(), chain(&[&x, w, a, w, &x]) == x),
        (
            "a-awxwa nilpotent".to_string(),
            (a - &chain(&[a, w, &x, w, a])).is_nilpotent(),
        ),
    ];
    WInverseReport::from_axioms(InverseKind::WDrazin, x, axioms)
}

/// True when the two readings of the weighted Drazin nilpotency condition
/// disagree on this pair: `a - awxwa` nilpotent (used here) versus
/// `(a - awxwa)w` nilpotent. The latter always holds in matrices, so this
/// flags exactly the pairs rejected by the stricter reading.
pub fn w_drazin_readings_disagree(p: &WPair) -> bool {
    let x = w_drazin_candidate(p);
    let rest = p.a() - &chain(&[p.a(), p.w(), &x, p.w(), p.a()]);
    rest.is_nilpotent() != (&rest * p.w()).is_nilpotent()
}

/// Weighted EP inverse: the weighted group witness additionally satisfying
/// `a(wx)^2 = x`, `x(wa)^2 = a`, `(awxw)* = awxw`, `(xwaw)* = xwaw`.
pub fn w_ep(p: &WPair) -> WInverseReport {
    let Some(x) = w_group_candidate(p) else {
        return WInverseReport::absent(InverseKind::WEp);
    };
    let (a, w) = (p.a(), p.w());
    let awxw = chain(&[a, w, &x, w]);
    let xwaw = chain(&[&x, w, a, w]);
    let axioms = vec![
        (
            "a(wx)^2=x".to_string(),
            chain(&[a, w, &x, w, &x]) == x,
        ),
        (
            "x(wa)^2=a".to_string(),
            chain(&[&x, w, a, w, a]) == *a,
        ),
        ("(awxw)*=awxw".to_string(), awxw.is_hermitian()),
        ("(xwaw)*=xwaw".to_string(), xwaw.is_hermitian()),
    ];
    WInverseReport::from_axioms(InverseKind::WEp, x, axioms)
}

/// Witness shared by the two eventual classifiers: defined whenever the
/// weighted Drazin inverse exists and is itself weighted EP.
pub(crate) fn gen_w_ep_witness(p: &WPair) -> Option<GMat> {
    let wd = w_drazin(p);
    if !wd.exists {
        return None;
    }
    let xd = wd.x.expect("witness present when exists");
    let sub = WPair::new(xd.clone(), p.w().clone()).expect("same dimension");
    let sube = w_ep(&sub);
    if !sube.exists {
        return None;
    }
    let xe = sube.x.expect("witness present when exists");
    let xdw = &xd * p.w();
    Some(chain(&[&xdw, &xdw, &xe]))
}

fn eventual_axioms(p: &WPair, x: &GMat, m: usize) -> Vec<(String, bool)> {
    let (a, w) = (p.a(), p.w());
    let aw = p.aw();
    let awxw = chain(&[a, w, x, w]);
    let xwaw = chain(&[x, w, a, w]);
    vec![
        ("a(wx)^2=x".to_string(), chain(&[a, w, x, w, x]) == *x),
        ("(awxw)*=awxw".to_string(), awxw.is_hermitian()),
        ("(xwaw)*=xwaw".to_string(), xwaw.is_hermitian()),
        (
            format!("(aw)^{m}=xw(aw)^{}", m + 1),
            aw.pow(m) == chain(&[x, w, &aw.pow(m + 1)]),
        ),
    ]
}

/// Generalized weighted EP inverse: exists when the weighted Drazin inverse
/// exists and is itself weighted EP. The witness is
/// `(a^{D,w} w)^2 (a^{D,w})_w^e`, verified against the eventual axiom list
/// at the index of `aw`.
pub fn gen_w_ep(p: &WPair) -> WInverseReport {
    let Some(x) = gen_w_ep_witness(p) else {
        return WInverseReport::absent(InverseKind::GenWEp);
    };
    let m = drazin(&p.aw()).index;
    let axioms = eventual_axioms(p, &x, m);
    WInverseReport::from_axioms(InverseKind::GenWEp, x, axioms)
}

/// Star-DMP classifier: the generalized weighted EP data together with the
/// least `n >= 1` satisfying `(aw)^n = xw(aw)^{n+1}`. In finite dimension
/// existence coincides with [`gen_w_ep`]; both the coincidence and the
/// bound `n <= dim + 1` are asserted.
pub fn w_star_dmp(p: &WPair) -> WInverseReport {
    let gw = gen_w_ep(p);
    let Some(x) = gen_w_ep_witness(p) else {
        debug_assert!(!gw.exists);
        return WInverseReport::absent(InverseKind::WStarDmp);
    };
    let aw = p.aw();
    let found = (1..=p.n() + 1)
        .find(|&n| aw.pow(n) == chain(&[&x, p.w(), &aw.pow(n + 1)]));
    let mut axioms = eventual_axioms(p, &x, drazin(&aw).index);
    axioms.pop();
    axioms.push((
        "(aw)^n=xw(aw)^(n+1) for some n>=1".to_string(),
        found.is_some(),
    ));
    let mut report = WInverseReport::from_axioms(InverseKind::WStarDmp, x, axioms);
    report.min_power = found;
    assert_eq!(
        report.exists, gw.exists,
        "star-DMP and generalized weighted EP must coincide in finite dimension"
    );
    if gw.exists {
        assert!(
            found.is_some(),
            "power identity must appear at some n <= dim + 1"
        );
    }
    report
}

/// Splitting `a = x + y` with `x` weighted EP, `x* y = 0`, `ywx = 0`, and
/// `yw` nilpotent of the recorded degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreDecomp {
    pub x: GMat,
    pub y: GMat,
    pub nil_degree: usize,
}

/// Core/eventually-vanishing decomposition of a generalized weighted EP
/// pair: `x = awgwa` for the canonical witness `g`, `y = a - x`. Returns
/// `None` when the pair is not generalized weighted EP.
pub fn core_decomposition(p: &WPair) -> Option<CoreDecomp> {
    let g = gen_w_ep(p);
    if !g.exists {
        return None;
    }
    let gx = g.x.expect("witness present when exists");
    let (a, w) = (p.a(), p.w());
    let x = chain(&[a, w, &gx, w, a]);
    let y = a - &x;
    assert_eq!(&x + &y, *a);
    assert!((&x.adjoint() * &y).is_zero(), "x*y = 0 must hold");
    assert!(chain(&[&y, w, &x]).is_zero(), "ywx = 0 must hold");
    assert!(
        w_ep(&WPair::new(x.clone(), w.clone()).expect("same dimension")).exists,
        "core part must be weighted EP"
    );
    let nil_degree = (&y * w)
        .nilpotency_degree()
        .expect("yw must be nilpotent");
    Some(CoreDecomp { x, y, nil_degree })
}

/// Hermitian projection certificate: `p` is a Hermitian idempotent with
/// `aw + p` invertible and `aw p = p aw` nilpotent, and `1 - p` factors as
/// `m w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjCert {
    pub p: GMat,
    pub m: GMat,
}

/// Projection certificate of a generalized weighted EP pair:
/// `p = 1 - awgw`, `m = awg` for the canonical witness `g`. Returns `None`
/// when the pair is not generalized weighted EP.
pub fn ep_projection(pair: &WPair) -> Option<ProjCert> {
    let g = gen_w_ep(pair);
    if !g.exists {
        return None;
    }
    let gx = g.x.expect("witness present when exists");
    let (a, w) = (pair.a(), pair.w());
    let aw = pair.aw();
    let m = &aw * &gx;
    let p = &GMat::identity(pair.n()) - &(&m * w);
    assert_eq!(&p * &p, p, "p must be idempotent");
    assert!(p.is_hermitian(), "p must be Hermitian");
    assert!((&aw + &p).inverse().is_some(), "aw + p must be invertible");
    let awp = &aw * &p;
    assert_eq!(awp, &p * &aw, "aw and p must commute");
    assert!(awp.is_nilpotent(), "awp must be nilpotent");
    assert_eq!(&GMat::identity(pair.n()) - &p, &m * w);
    let _ = a;
    Some(ProjCert { p, m })
}

/// Result of the power search: least `k` with `a(wa)^{k-1}` weighted EP,
/// and that instance's witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerEp {
    pub k: usize,
    pub witness: GMat,
}

/// Search `k = 1, ..., dim + 1` for the first power `a(wa)^{k-1}` that is
/// weighted EP. Succeeds exactly when the pair is star-DMP (asserted both
/// ways at runtime).
pub fn power_ep_reduction(p: &WPair) -> Option<PowerEp> {
    let (a, w) = (p.a(), p.w());
    let mut c = a.clone(); // a (wa)^{k-1} at step k
    let mut found = None;
    for k in 1..=p.n() + 1 {
        let rep = w_ep(&WPair::new(c.clone(), w.clone()).expect("same dimension"));
        if rep.exists {
            found = Some(PowerEp {
                k,
                witness: rep.x.expect("witness present when exists"),
            });
            break;
        }
        c = chain(&[&c, w, a]);
    }
    let dmp = w_star_dmp(p).exists;
    assert_eq!(
        found.is_some(),
        dmp,
        "power reduction must succeed exactly on star-DMP pairs"
    );
    found
}

/// Range-style criterion: weighted group invertible and the column space of
/// `a` equals the column space of `(aw)*`. Agrees with [`w_ep`] existence.
pub fn range_condition(p: &WPair) -> bool {
    w_group(p).exists && p.a().col_space_equal(&p.aw().adjoint())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ginv::{drazin, group_inverse, is_ep};
    use crate::scalar::GScalar;

    fn pair(a: GMat, w: GMat) -> WPair {
        WPair::new(a, w).unwrap()
    }

    fn jordan2() -> GMat {
        GMat::from_int_rows(&[&[0, 1], &[0, 0]])
    }

    fn idem_non_ep() -> GMat {
        GMat::from_int_rows(&[&[1, 1], &[0, 0]])
    }

    fn diag_pair() -> WPair {
        // a = diag(2, 0), w = diag(1/2, 3)
        pair(
            GMat::diag(&[GScalar::from_int(2), GScalar::from_int(0)]),
            GMat::diag(&[GScalar::from_ratio(1, 2), GScalar::from_int(3)]),
        )
    }

    #[test]
    fn w_group_diagonal_example() {
        let rep = w_group(&diag_pair());
        assert!(rep.exists);
        assert_eq!(
            rep.x.unwrap(),
            GMat::diag(&[GScalar::from_int(2), GScalar::from_int(0)])
        );
        assert!(rep.verified_axioms.iter().all(|(_, ok)| *ok));
    }

    #[test]
    fn w_group_absent_for_shift_matrix() {
        let rep = w_group(&pair(jordan2(), GMat::identity(2)));
        assert!(!rep.exists);
        assert!(rep.x.is_none());
        assert!(rep.verified_axioms.is_empty());
    }

    #[test]
    fn w_group_of_zero_is_zero() {
        let rep = w_group(&pair(GMat::zeros(2), GMat::identity(2)));
        assert!(rep.exists);
        assert!(rep.x.unwrap().is_zero());
    }

    #[test]
    fn w_group_fails_for_zero_weight_and_nonzero_matrix() {
        let rep = w_group(&pair(GMat::identity(2), GMat::zeros(2)));
        assert!(!rep.exists);
        // Candidate x = 0 exists ((aw)^# = 0) but awxwa = 0 != a.
        assert_eq!(
            rep.verified_axioms
                .iter()
                .find(|(name, _)| name == "awxwa=a")
                .map(|(_, ok)| *ok),
            Some(false)
        );
    }

    #[test]
    fn w_drazin_nilpotency_reading() {
        // a = I, w = 0: candidate 0, a - 0 = I is not nilpotent.
        let p = pair(GMat::identity(2), GMat::zeros(2));
        let rep = w_drazin(&p);
        assert!(!rep.exists);
        assert!(w_drazin_readings_disagree(&p));
        // Identity weight never splits the readings.
        let q = pair(jordan2(), GMat::identity(2));
        assert!(!w_drazin_readings_disagree(&q));
        assert!(w_drazin(&q).exists);
    }

    #[test]
    fn w_drazin_specializes_to_drazin_at_identity_weight() {
        for a in [
            jordan2(),
            idem_non_ep(),
            GMat::from_int_rows(&[&[2, 0, 0], &[0, 0, 1], &[0, 0, 0]]),
            GMat::identity(3),
        ] {
            let rep = w_drazin(&pair(a.clone(), GMat::identity(a.n())));
            assert!(rep.exists);
            assert_eq!(rep.x.unwrap(), drazin(&a).d);
        }
    }

    #[test]
    fn w_group_specializes_to_group_inverse_at_identity_weight() {
        for a in [jordan2(), idem_non_ep(), GMat::zeros(2), GMat::identity(2)] {
            let rep = w_group(&pair(a.clone(), GMat::identity(a.n())));
            assert_eq!(rep.exists, group_inverse(&a).is_some());
            if rep.exists {
                assert_eq!(rep.x, group_inverse(&a));
            }
        }
    }

    #[test]
    fn w_ep_diagonal_example() {
        let rep = w_ep(&diag_pair());
        assert!(rep.exists);
        assert_eq!(
            rep.x.unwrap(),
            GMat::diag(&[GScalar::from_int(2), GScalar::from_int(0)])
        );
    }

    #[test]
    fn w_ep_rejects_non_hermitian_idempotent() {
        let rep = w_ep(&pair(idem_non_ep(), GMat::identity(2)));
        assert!(!rep.exists);
        // The group-side candidate exists (x = a) but the stars fail.
        let broken: Vec<_> = rep
            .verified_axioms
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(name, _)| name.as_str())
            .collect();
        assert_eq!(broken, vec!["(awxw)*=awxw", "(xwaw)*=xwaw"]);
    }

    #[test]
    fn w_ep_specializes_to_ep_at_identity_weight() {
        for a in [
            jordan2(),
            idem_non_ep(),
            GMat::identity(2),
            GMat::zeros(2),
            GMat::diag(&[GScalar::from_int(2), GScalar::from_int(0)]),
            GMat::from_int_rows(&[&[0, -1], &[1, 0]]),
        ] {
            let rep = w_ep(&pair(a.clone(), GMat::identity(a.n())));
            assert_eq!(rep.exists, is_ep(&a), "mismatch for\n{a}");
        }
    }

    #[test]
    fn gen_w_ep_accepts_nilpotent_with_zero_witness() {
        let rep = gen_w_ep(&pair(jordan2(), GMat::identity(2)));
        assert!(rep.exists);
        assert!(rep.x.unwrap().is_zero());
    }

    #[test]
    fn gen_w_ep_rejects_non_hermitian_idempotent() {
        let rep = gen_w_ep(&pair(idem_non_ep(), GMat::identity(2)));
        assert!(!rep.exists);
        // w-Drazin exists (witness a itself), so rejection happens at the
        // EP stage of the Drazin witness.
        let wd = w_drazin(&pair(idem_non_ep(), GMat::identity(2)));
        assert!(wd.exists);
        assert_eq!(wd.x.unwrap(), idem_non_ep());
    }

    #[test]
    fn star_dmp_matches_gen_w_ep_and_records_min_power() {
        let p = pair(jordan2(), GMat::identity(2));
        let rep = w_star_dmp(&p);
        assert!(rep.exists);
        assert_eq!(rep.min_power, Some(2));
        assert!(rep.x.unwrap().is_zero());

        let q = pair(GMat::identity(2), GMat::identity(2));
        let rep = w_star_dmp(&q);
        assert!(rep.exists);
        assert_eq!(rep.min_power, Some(1));

        let r = pair(idem_non_ep(), GMat::identity(2));
        let rep = w_star_dmp(&r);
        assert!(!rep.exists);
        assert_eq!(rep.min_power, None);
    }

    #[test]
    fn core_decomposition_examples() {
        // Hermitian projection: pure core part.
        let p = pair(
            GMat::diag(&[GScalar::from_int(1), GScalar::from_int(0)]),
            GMat::identity(2),
        );
        let d = core_decomposition(&p).unwrap();
        assert_eq!(d.x, *p.a());
        assert!(d.y.is_zero());
        assert_eq!(d.nil_degree, 1);

        // Nilpotent: pure eventually-vanishing part.
        let q = pair(jordan2(), GMat::identity(2));
        let d = core_decomposition(&q).unwrap();
        assert!(d.x.is_zero());
        assert_eq!(d.y, jordan2());
        assert_eq!(d.nil_degree, 2);

        // Not generalized weighted EP: no decomposition.
        assert!(core_decomposition(&pair(idem_non_ep(), GMat::identity(2))).is_none());
    }

    #[test]
    fn ep_projection_examples() {
        let q = pair(jordan2(), GMat::identity(2));
        let cert = ep_projection(&q).unwrap();
        assert_eq!(cert.p, GMat::identity(2));
        assert!(cert.m.is_zero());

        let p = pair(
            GMat::diag(&[GScalar::from_int(1), GScalar::from_int(0)]),
            GMat::identity(2),
        );
        let cert = ep_projection(&p).unwrap();
        assert_eq!(
            cert.p,
            GMat::diag(&[GScalar::from_int(0), GScalar::from_int(1)])
        );

        assert!(ep_projection(&pair(idem_non_ep(), GMat::identity(2))).is_none());
    }

    #[test]
    fn power_reduction_examples() {
        let q = pair(jordan2(), GMat::identity(2));
        let hit = power_ep_reduction(&q).unwrap();
        assert_eq!(hit.k, 2);
        assert!(hit.witness.is_zero());

        assert!(power_ep_reduction(&pair(idem_non_ep(), GMat::identity(2))).is_none());

        // Weighted EP pairs succeed immediately.
        let hit = power_ep_reduction(&diag_pair()).unwrap();
        assert_eq!(hit.k, 1);
    }

    #[test]
    #[should_panic(expected = "power reduction must succeed exactly on star-DMP pairs")]
    fn power_reduction_panics_when_readings_split() {
        // a = 1, w = diag(1, 0): the power a(wa) is weighted EP, but the
        // strict residual gate rejects the weighted Drazin inverse, so the
        // asserted equivalence with the star-DMP class genuinely fails.
        let p = pair(
            GMat::identity(2),
            GMat::diag(&[GScalar::from_int(1), GScalar::from_int(0)]),
        );
        assert!(w_drazin_readings_disagree(&p));
        power_ep_reduction(&p);
    }

    #[test]
    fn range_condition_examples() {
        assert!(range_condition(&pair(
            GMat::diag(&[GScalar::from_int(1), GScalar::from_int(0)]),
            GMat::identity(2),
        )));
        assert!(!range_condition(&pair(idem_non_ep(), GMat::identity(2))));
        assert!(range_condition(&diag_pair()));
        // Always agrees with the weighted EP classifier.
        for p in [
            diag_pair(),
            pair(jordan2(), GMat::identity(2)),
            pair(idem_non_ep(), GMat::identity(2)),
            pair(GMat::identity(3), GMat::identity(3)),
            pair(GMat::zeros(2), GMat::zeros(2)),
        ] {
            assert_eq!(range_condition(&p), w_ep(&p).exists);
        }
    }

    #[test]
    fn scalar_pair_classifies_cleanly() {
        // 1x1: a = 2, w = 3.
        let p = pair(
            GMat::diag(&[GScalar::from_int(2)]),
            GMat::diag(&[GScalar::from_int(3)]),
        );
        assert!(w_ep(&p).exists);
        assert_eq!(
            w_group(&p).x.unwrap(),
            GMat::diag(&[GScalar::from_ratio(1, 18)])
        );
        assert_eq!(w_star_dmp(&p).min_power, Some(1));
    }

    #[test]
    fn pair_json_requires_matching_dimensions() {
        let a = serde_json::to_value(GMat::identity(2)).unwrap();
        let w = serde_json::to_value(GMat::identity(3)).unwrap();
        let bad = serde_json::json!({ "a": a, "w": w });
        assert!(serde_json::from_value::<WPair>(bad).is_err());
    }
}
