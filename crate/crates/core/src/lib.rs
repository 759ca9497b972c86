//! Exact computer algebra for Schur Q-functions and the BKP hierarchy.
//!
//! Everything lives in `Q[p1, p3, p5, ...]` with exact rational
//! coefficients:
//!
//! * [`ring`]: sparse graded polynomials and the tensor square.
//! * [`series`]: exponential/logarithm of generating series, one-row
//!   `Q_k`, symmetric polynomials of parameters, shifted-power transitions.
//! * [`fermion`]: neutral fermions `φ_m` in vertex-operator form, `Q_λ`,
//!   the operator `Ω` and the bilinear-identity check.
//! * [`multiparam`]: multiparameter Schur Q-functions `Q_α^(a)`.
//! * [`hirota`]: Hirota derivatives, the BKP hierarchy and its checker.
//! * [`oracle`]: brute-force symmetrization in explicit variables.
//! * [`io`]: canonical text and JSON forms.

pub mod error;
pub mod fermion;
pub mod hirota;
pub mod io;
pub mod multiparam;
pub mod oracle;
pub mod ring;
pub mod series;

pub use error::{Error, Result};
pub use fermion::{apply_omega, apply_phi, is_bkp_tau_bilinear, q_lambda, BilinearReport};
pub use hirota::{
    bkp_check, bkp_generate, hirota_apply, p_to_x, x_to_p, BkpReport, HirotaEquation,
};
pub use multiparam::{korotkih_check, multiparam_q, normalize_index, Normalized};
pub use ring::{parse_rat, rat, ratio, DPoly, Mono, PPoly, Rat, Side, TPoly, XPoly};
pub use series::{schur_q_row, ParamFamily, ParamSeq, Transition};
