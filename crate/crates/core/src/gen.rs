//! Deterministic construction of test pairs: families with known
//! classification (labels the weighted module must reproduce) plus dense
//! unstructured instances for stress.
//!
//! Everything is a pure function of the [`GenSpec`]: the random source is a
//! fixed 64-bit mixing function, so equal specs produce byte-identical
//! instances on every platform.

use crate::error::Error;
use crate::matrix::GMat;
use crate::scalar::GScalar;
use crate::weighted::WPair;
use serde::{Deserialize, Serialize};

/// splitmix64. Small, stateless apart from the counter, and stable: the
/// three constants below are the whole specification of the stream.
struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    fn next(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Draw below `bound`. The bounds used here are tiny relative to 2^64,
    /// so the modulo bias is irrelevant for corpus construction.
    fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound.max(1)
    }

    fn coin(&mut self) -> bool {
        self.next() & 1 == 0
    }

    /// Signed integer with absolute value in [1, mag].
    fn nonzero_int(&mut self, mag: i64) -> i64 {
        let v = 1 + self.below(mag as u64) as i64;
        if self.coin() {
            v
        } else {
            -v
        }
    }

    /// Nonzero Gaussian rational: real part never zero, imaginary part
    /// present on a coin flip. Numerators and denominators stay in
    /// [1, mag].
    fn nonzero_scalar(&mut self, mag: i64) -> GScalar {
        let rp = self.nonzero_int(mag);
        let rq = 1 + self.below(mag as u64) as i64;
        if self.coin() {
            let ip = self.nonzero_int(mag);
            let iq = 1 + self.below(mag as u64) as i64;
            GScalar::from_parts(rp, rq, ip, iq)
        } else {
            GScalar::from_parts(rp, rq, 0, 1)
        }
    }

    /// Zero with probability 1/3, otherwise a nonzero scalar.
    fn sparse_scalar(&mut self, mag: i64) -> GScalar {
        if self.below(3) == 0 {
            GScalar::zero()
        } else {
            self.nonzero_scalar(mag)
        }
    }
}

/// Instance families, each with a documented classification outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// Diagonal `a` with diagonal `w` nonzero on (at least) the support of
    /// `a`; such pairs are always weighted EP.
    #[serde(rename = "diagonal-w-ep")]
    DiagonalWEp,
    /// Block diagonal `a = blockdiag(a1, N)`, `w = blockdiag(w1, w2)` with
    /// invertible diagonal core and strictly upper triangular `N`;
    /// sometimes conjugated by a rational unitary. Always star-DMP.
    #[serde(rename = "block-star-dmp")]
    BlockStarDmp,
    /// `[[I, T], [0, 0]]` with nonzero `T` and identity weight: a
    /// non-Hermitian idempotent, outside all three star-sensitive classes.
    #[serde(rename = "non-ep-idempotent")]
    NonEpIdempotent,
    /// The single nilpotent Jordan block with identity weight; generalized
    /// weighted EP with zero witness. Fixed output, the seed is unused.
    #[serde(rename = "jordan-nilpotent")]
    JordanNilpotent,
    /// A structured base pair conjugated by an exact unitary: `(uau*, uwu*)`
    /// carries the base pair's label because every defining identity
    /// transports through a unitary.
    #[serde(rename = "unitary-conjugated")]
    UnitaryConjugated,
    /// Both matrices fully dense with every entry nonzero; no label.
    #[serde(rename = "random-dense")]
    RandomDense,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::DiagonalWEp,
        Family::BlockStarDmp,
        Family::NonEpIdempotent,
        Family::JordanNilpotent,
        Family::UnitaryConjugated,
        Family::RandomDense,
    ];

    fn name(self) -> &'static str {
        match self {
            Family::DiagonalWEp => "diagonal-w-ep",
            Family::BlockStarDmp => "block-star-dmp",
            Family::NonEpIdempotent => "non-ep-idempotent",
            Family::JordanNilpotent => "jordan-nilpotent",
            Family::UnitaryConjugated => "unitary-conjugated",
            Family::RandomDense => "random-dense",
        }
    }
}

/// Expected classification attached to a generated pair. Classes are
/// nested (w-EP implies generalized w-EP implies star-DMP), so a label
/// asserts membership in the named class, not exact membership.
/// `NoneOfTheClasses` asserts that all three star-sensitive classes are
/// empty; the purely algebraic inverses may still exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Label {
    #[serde(rename = "w-ep")]
    WEp,
    #[serde(rename = "star-dmp")]
    StarDmp,
    #[serde(rename = "gen-w-ep")]
    GenWEp,
    #[serde(rename = "none-of-the-classes")]
    NoneOfTheClasses,
    #[serde(rename = "unlabeled")]
    Unlabeled,
}

/// Complete description of one generated instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub family: Family,
    pub n: usize,
    pub seed: u64,
    /// Bound on the numerators and denominators of generated entries.
    pub magnitude: i64,
}

/// A generated pair with its spec and expected classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub spec: GenSpec,
    pub pair: WPair,
    pub label: Label,
}

fn diag_of(rng: &mut SplitMix64, n: usize, mag: i64, sparse: bool) -> GMat {
    let d: Vec<GScalar> = (0..n)
        .map(|_| {
            if sparse {
                rng.sparse_scalar(mag)
            } else {
                rng.nonzero_scalar(mag)
            }
        })
        .collect();
    GMat::diag(&d)
}

fn diagonal_w_ep(rng: &mut SplitMix64, n: usize, mag: i64) -> (GMat, GMat) {
    let a = diag_of(rng, n, mag, true);
    let w = diag_of(rng, n, mag, false);
    (a, w)
}

/// Invertible diagonal core plus a strictly upper triangular tail block,
/// with block-diagonal weight; half the time the pair is conjugated by an
/// exact unitary, which preserves the class.
fn block_star_dmp(rng: &mut SplitMix64, n: usize, mag: i64) -> (GMat, GMat) {
    let r = if n == 1 { 1 } else { 1 + rng.below(n as u64 - 1) as usize };
    let w = diag_of(rng, n, mag, false);
    let mut rows = vec![vec![GScalar::zero(); n]; n];
    for (i, row) in rows.iter_mut().enumerate().take(r) {
        row[i] = rng.nonzero_scalar(mag);
    }
    for (i, row) in rows.iter_mut().enumerate().skip(r) {
        for cell in row.iter_mut().skip(i + 1) {
            *cell = rng.sparse_scalar(mag);
        }
    }
    let a = GMat::from_rows(rows);
    if rng.coin() {
        let u = unitary(rng, n);
        let ustar = u.adjoint();
        (&(&u * &a) * &ustar, &(&u * &w) * &ustar)
    } else {
        (a, w)
    }
}

/// `[[I, T], [0, 0]]` with every entry of `T` nonzero, identity weight.
/// There is no 1-by-1 non-Hermitian idempotent, so dimension is floored
/// at two.
fn non_ep_idempotent(rng: &mut SplitMix64, n: usize, mag: i64) -> (GMat, GMat) {
    let n = n.max(2);
    let r = 1 + rng.below(n as u64 - 1) as usize;
    let mut rows = vec![vec![GScalar::zero(); n]; n];
    for (i, row) in rows.iter_mut().enumerate().take(r) {
        row[i] = GScalar::one();
        for cell in row.iter_mut().take(n).skip(r) {
            *cell = rng.nonzero_scalar(mag);
        }
    }
    (GMat::from_rows(rows), GMat::identity(n))
}

fn jordan_nilpotent(n: usize) -> (GMat, GMat) {
    let a = GMat::from_fn(n, |i, j| {
        if j == i + 1 {
            GScalar::one()
        } else {
            GScalar::zero()
        }
    });
    (a, GMat::identity(n))
}

fn random_dense(rng: &mut SplitMix64, n: usize, mag: i64) -> (GMat, GMat) {
    let a = GMat::from_fn(n, |_, _| rng.nonzero_scalar(mag));
    let w = GMat::from_fn(n, |_, _| rng.nonzero_scalar(mag));
    (a, w)
}

const TRIPLES: [(i64, i64, i64); 6] = [
    (3, 4, 5),
    (5, 12, 13),
    (8, 15, 17),
    (7, 24, 25),
    (20, 21, 29),
    (9, 40, 41),
];

/// Unimodular Gaussian rational: (p + qi)/r with p^2 + q^2 = r^2, or a
/// fourth root of unity.
fn phase(rng: &mut SplitMix64) -> GScalar {
    match rng.below(3) {
        0 => {
            let (p, q, r) = TRIPLES[rng.below(6) as usize];
            let q = if rng.coin() { q } else { -q };
            GScalar::from_parts(p, r, q, r)
        }
        1 => {
            let (p, q, r) = TRIPLES[rng.below(6) as usize];
            let p = if rng.coin() { p } else { -p };
            GScalar::from_parts(q, r, p, r)
        }
        _ => match rng.below(4) {
            0 => GScalar::one(),
            1 => GScalar::from_int(-1),
            2 => GScalar::i(),
            _ => GScalar::from_parts(0, 1, -1, 1),
        },
    }
}

/// Product of a unimodular diagonal and planar rotations with
/// Pythagorean-triple cosines, hence exactly unitary.
fn unitary(rng: &mut SplitMix64, n: usize) -> GMat {
    let phases: Vec<GScalar> = (0..n).map(|_| phase(rng)).collect();
    let mut u = GMat::diag(&phases);
    for i in 0..n.saturating_sub(1) {
        let (p, q, r) = TRIPLES[rng.below(6) as usize];
        let c = GScalar::from_ratio(p, r);
        let s = GScalar::from_ratio(q, r);
        let rot = GMat::from_fn(n, |a, b| {
            if a == i && b == i || a == i + 1 && b == i + 1 {
                c.clone()
            } else if a == i && b == i + 1 {
                -&s
            } else if a == i + 1 && b == i {
                s.clone()
            } else if a == b {
                GScalar::one()
            } else {
                GScalar::zero()
            }
        });
        u = &u * &rot;
    }
    u
}

/// Exact unitary matrix: `u * u.adjoint() == identity` holds with no
/// rounding because every entry is a Gaussian rational built from
/// Pythagorean data.
pub fn rational_unitary(n: usize, seed: u64) -> GMat {
    assert!(n >= 1, "unitaries need dimension at least 1");
    unitary(&mut SplitMix64::new(seed), n)
}

fn unitary_conjugated(rng: &mut SplitMix64, n: usize, mag: i64) -> (GMat, GMat, Label) {
    let base = if n == 1 { 0 } else { rng.below(4) };
    let ((a, w), label) = match base {
        0 => (diagonal_w_ep(rng, n, mag), Label::WEp),
        1 => (jordan_nilpotent(n), Label::GenWEp),
        2 => (non_ep_idempotent(rng, n, mag), Label::NoneOfTheClasses),
        _ => (block_star_dmp(rng, n, mag), Label::StarDmp),
    };
    let u = unitary(rng, a.n());
    let ustar = u.adjoint();
    (&(&u * &a) * &ustar, &(&u * &w) * &ustar, label)
}

/// Build the instance described by `spec`.
pub fn generate(spec: &GenSpec) -> Result<CorpusEntry, Error> {
    if spec.n == 0 {
        return Err(Error::UnsupportedDimension {
            family: spec.family.name(),
            n: 0,
        });
    }
    let mut rng = SplitMix64::new(spec.seed);
    let mag = spec.magnitude.max(1);
    let (a, w, label) = match spec.family {
        Family::DiagonalWEp => {
            let (a, w) = diagonal_w_ep(&mut rng, spec.n, mag);
            (a, w, Label::WEp)
        }
        Family::BlockStarDmp => {
            let (a, w) = block_star_dmp(&mut rng, spec.n, mag);
            (a, w, Label::StarDmp)
        }
        Family::NonEpIdempotent => {
            let (a, w) = non_ep_idempotent(&mut rng, spec.n, mag);
            (a, w, Label::NoneOfTheClasses)
        }
        Family::JordanNilpotent => {
            let (a, w) = jordan_nilpotent(spec.n);
            (a, w, Label::GenWEp)
        }
        Family::UnitaryConjugated => unitary_conjugated(&mut rng, spec.n, mag),
        Family::RandomDense => {
            let (a, w) = random_dense(&mut rng, spec.n, mag);
            (a, w, Label::Unlabeled)
        }
    };
    let pair = WPair::new(a, w).expect("families emit matching dimensions");
    Ok(CorpusEntry {
        spec: *spec,
        pair,
        label,
    })
}

/// The fixed benchmark corpus: cycles all six families across dimensions
/// one through five (thirty combinations, coprime cycle lengths) with
/// per-entry seeds drawn from the master seed.
pub fn standard_corpus(seed: u64, count: usize) -> Vec<CorpusEntry> {
    let mut meta = SplitMix64::new(seed);
    (0..count)
        .map(|k| {
            let spec = GenSpec {
                family: Family::ALL[k % Family::ALL.len()],
                n: 1 + k % 5,
                seed: meta.next(),
                magnitude: 10,
            };
            generate(&spec).expect("standard corpus uses supported dimensions")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weighted::{gen_w_ep, w_ep, w_star_dmp};

    fn spec(family: Family, n: usize, seed: u64) -> GenSpec {
        GenSpec {
            family,
            n,
            seed,
            magnitude: 10,
        }
    }

    #[test]
    fn unitaries_are_exactly_unitary() {
        for n in 1..=4 {
            for seed in [0, 1, 7, 0xDEAD_BEEF] {
                let u = rational_unitary(n, seed);
                assert_eq!(&u * &u.adjoint(), GMat::identity(n), "n={n} seed={seed}");
            }
        }
    }

    #[test]
    fn generation_is_deterministic() {
        for family in Family::ALL {
            let s = spec(family, 3, 41);
            let one = generate(&s).unwrap();
            let two = generate(&s).unwrap();
            assert_eq!(one, two);
            assert_eq!(
                serde_json::to_string(&one).unwrap(),
                serde_json::to_string(&two).unwrap()
            );
        }
    }

    #[test]
    fn jordan_family_is_fixed() {
        let entry = generate(&spec(Family::JordanNilpotent, 2, 99)).unwrap();
        assert_eq!(entry.pair.a(), &GMat::from_int_rows(&[&[0, 1], &[0, 0]]));
        assert_eq!(entry.pair.w(), &GMat::identity(2));
        assert_eq!(entry.label, Label::GenWEp);
    }

    #[test]
    fn zero_dimension_is_rejected() {
        let err = generate(&spec(Family::DiagonalWEp, 0, 1)).unwrap_err();
        assert!(matches!(err, Error::UnsupportedDimension { n: 0, .. }));
    }

    #[test]
    fn labels_are_sound_on_a_sample() {
        for family in Family::ALL {
            for n in 1..=3 {
                for seed in 0..4 {
                    let entry = generate(&spec(family, n, seed)).unwrap();
                    let p = &entry.pair;
                    match entry.label {
                        Label::WEp => assert!(w_ep(p).exists, "{family:?} n={n} seed={seed}"),
                        Label::StarDmp => {
                            assert!(w_star_dmp(p).exists, "{family:?} n={n} seed={seed}")
                        }
                        Label::GenWEp => {
                            assert!(gen_w_ep(p).exists, "{family:?} n={n} seed={seed}")
                        }
                        Label::NoneOfTheClasses => {
                            assert!(!w_ep(p).exists, "{family:?} n={n} seed={seed}");
                            assert!(!gen_w_ep(p).exists, "{family:?} n={n} seed={seed}");
                            assert!(!w_star_dmp(p).exists, "{family:?} n={n} seed={seed}");
                        }
                        Label::Unlabeled => {}
                    }
                }
            }
        }
    }

    #[test]
    fn conjugation_transports_witnesses() {
        // Witnesses of the weighted classes move as x -> u x u* under
        // (a, w) -> (u a u*, u w u*).
        let base = generate(&spec(Family::DiagonalWEp, 3, 5)).unwrap();
        let u = rational_unitary(3, 17);
        let ustar = u.adjoint();
        let conj = |m: &GMat| &(&u * m) * &ustar;
        let moved = WPair::new(conj(base.pair.a()), conj(base.pair.w())).unwrap();
        let x0 = w_ep(&base.pair).x.expect("diagonal family is w-EP");
        let x1 = w_ep(&moved).x.expect("class preserved under conjugation");
        assert_eq!(x1, conj(&x0));
    }

    #[test]
    fn corpus_cycles_families_and_dimensions() {
        let corpus = standard_corpus(2024, 60);
        assert_eq!(corpus.len(), 60);
        assert_eq!(corpus[0].spec.family, Family::ALL[0]);
        assert_eq!(corpus[6].spec.family, Family::ALL[0]);
        let dims: std::collections::BTreeSet<usize> =
            corpus.iter().map(|e| e.pair.n()).collect();
        assert!(dims.contains(&1) && dims.contains(&5));
        // Distinct entries of the same family differ (seeds decorrelate).
        assert_ne!(corpus[0].pair, corpus[30].pair);
    }

    #[test]
    fn corpus_entries_round_trip_as_json() {
        let corpus = standard_corpus(7, 12);
        let text = serde_json::to_string(&corpus).unwrap();
        let back: Vec<CorpusEntry> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, corpus);
        assert_eq!(text, serde_json::to_string(&back).unwrap());
    }
}
