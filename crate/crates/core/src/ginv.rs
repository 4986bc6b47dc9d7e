//! Classical generalized inverses, all exact.
//!
//! * Moore-Penrose through a full-rank factorization `M = F G`:
//!   `M^+ = G* (G G*)^{-1} (F* F)^{-1} F*`. Both Gram matrices are exactly
//!   invertible because the factors have full rank.
//! * Drazin through the shrinking-core iteration: factor `M = F G`, recurse
//!   on the smaller core `G F`, and lift with `M^D = F ((GF)^D)^2 G`. The
//!   core dimension strictly decreases, so the recursion terminates at an
//!   invertible or zero core.
//! * Group inverse as the Drazin inverse when the index is at most one.
//!
//! The Moore-Penrose formula is deliberately not used to compute the Drazin
//! inverse (`M^k (M^{2k+1})^+ M^k` inflates entries); that identity serves as
//! an independent cross-check in the tests instead.

use crate::matrix::GMat;

/// Drazin inverse together with the index: the least `k >= 0` with
/// `rank(M^k) = rank(M^{k+1})`. Index 0 means invertible; the zero matrix
/// has index 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrazinResult {
    pub d: GMat,
    pub index: usize,
}

/// Exact Moore-Penrose inverse. The unique solution of the four Penrose
/// equations; for the zero matrix it is zero.
pub fn moore_penrose(m: &GMat) -> GMat {
    let frf = m.full_rank_factorization();
    if frf.rank == 0 {
        return GMat::zeros(m.n());
    }
    let f_star = frf.f.adjoint();
    let g_star = frf.g.adjoint();
    let gg = frf.g.mul(&g_star);
    let ff = f_star.mul(&frf.f);
    let gg_inv = gg.inverse().expect("G G* of a full-row-rank G is invertible");
    let ff_inv = ff.inverse().expect("F* F of a full-column-rank F is invertible");
    GMat::from_rect(g_star.mul(&gg_inv).mul(&ff_inv).mul(&f_star))
}

fn drazin_core(m: &GMat) -> GMat {
    if let Some(inv) = m.inverse() {
        return inv;
    }
    let frf = m.full_rank_factorization();
    if frf.rank == 0 {
        return GMat::zeros(m.n());
    }
    // Core is r x r with r < n, so this terminates.
    let core = GMat::from_rect(frf.g.mul(&frf.f));
    let dc = drazin_core(&core);
    let dc2 = &dc * &dc;
    GMat::from_rect(frf.f.mul(dc2.as_rect()).mul(&frf.g))
}

/// Exact Drazin inverse and index.
pub fn drazin(m: &GMat) -> DrazinResult {
    let mut prev = m.n() + 1; // rank(M^0) = n, encoded as sentinel via first iteration
    let mut p = GMat::identity(m.n());
    let mut index = 0;
    loop {
        let r = p.rank();
        if r == prev {
            break;
        }
        prev = r;
        index += 1;
        p = &p * m;
    }
    DrazinResult {
        d: drazin_core(m),
        index: index - 1,
    }
}

/// Group inverse: the Drazin inverse when the index is at most one, absent
/// otherwise. The zero matrix has group inverse zero.
pub fn group_inverse(m: &GMat) -> Option<GMat> {
    let dz = drazin(m);
    (dz.index <= 1).then_some(dz.d)
}

/// EP test: the group inverse exists and `M M^#` is Hermitian. Equivalent to
/// the column spaces of `M` and `M*` coinciding.
pub fn is_ep(m: &GMat) -> bool {
    match group_inverse(m) {
        Some(g) => (m * &g).is_hermitian(),
        None => false,
    }
}
