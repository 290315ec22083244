use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("expected a polynomial, found a proper fraction")]
    NotPolynomial,

    #[error("reduction step budget of {limit} exceeded")]
    StepBudgetExceeded { limit: u64 },

    #[error("curve is not smooth: 1 is not in the Jacobian ideal (F, F_x, F_y)")]
    NotSmooth,

    #[error("polynomial uses variables outside {allowed}")]
    BadVariables { allowed: &'static str },

    #[error("polynomial must be nonconstant")]
    ConstantPolynomial,

    #[error("the lifted field does not preserve the curve ideal")]
    DoesNotPreserveIdeal,

    #[error("1 is not in (P, Q, R) + I, so the bracket construction does not apply")]
    UnitCertificateAbsent,

    #[error("the field tau vanishes identically on the curve")]
    ZeroTau,

    #[error("vector fields live on different curves")]
    CurveMismatch,

    #[error("operation needs a {expected} curve")]
    WrongCurveKind { expected: &'static str },

    #[error("denominator is not a power of the localizing polynomial")]
    NotInLocalization,

    #[error("membership certificate unexpectedly missing")]
    CertificateFailure,
}
