use crate::numbers::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum Error {
    #[error("{name} must be non-negative, got {value}")]
    NegativeArgument { name: &'static str, value: i64 },

    #[error("index pair out of range: n = {n}, k = {k}")]
    IndexOutOfRange { n: u32, k: u32 },

    #[error("B_{{{n},{k}}} needs {needed} arguments, got {got}")]
    ShortBellArgs {
        n: u32,
        k: u32,
        needed: usize,
        got: usize,
    },

    #[error("series must have constant term {expected}, found {found}")]
    ConstantTerm { expected: i32, found: Box<Rational> },

    #[error("the Stirling form of sinc^l needs l >= 1")]
    StirlingZeroPower,

    #[error("the closed form for the k-th derivative carries x^-k and needs x != 0 when k >= 1")]
    ZeroAbscissa,

    #[error("{base}^{exponent} is not rational")]
    IrrationalPower {
        base: Box<Rational>,
        exponent: Box<Rational>,
    },

    #[error("set-partition enumeration is capped at n = {max}, got n = {n}")]
    EnumerationTooLarge { n: u32, max: u32 },

    #[error("{0}")]
    Domain(String),

    #[error("cannot parse {input:?} as a rational: {reason}")]
    Parse { input: String, reason: String },
}
