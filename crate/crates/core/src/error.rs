use thiserror::Error;

use crate::poly::Var;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("attempted to invert zero")]
    ZeroInverse,

    #[error("no value assigned to variable {0}")]
    MissingVariable(Var),

    #[error("vanishing order requested for the zero form")]
    ZeroForm,

    #[error("the point (0:0) is not a point of the projective line")]
    ZeroPoint,

    #[error("degenerate parameter: (0, 0) does not determine a point")]
    DegenerateParameter,

    #[error("orders ({v2}, {v3}, {vd}) with J-class {j} match no Kodaira fiber type")]
    UnclassifiableTriple {
        v2: u32,
        v3: u32,
        vd: u32,
        j: String,
    },

    #[error("discriminant vanishes identically")]
    ZeroDiscriminant,

    #[error("{0} has no square root in Q(i, sqrt 2)")]
    NoSquareRootInK(String),

    #[error("unknown divisor class name `{0}`")]
    UnknownName(String),

    #[error("class is not a numerical section (s.f = {sf}, s.s = {ss})")]
    NotNumericalSection { sf: i64, ss: i64 },

    #[error("group element does not permute V1, V2, V3 up to sign")]
    NotSignedPermutation,

    #[error("Molien coefficient at degree {degree} is not a non-negative integer: {value}")]
    NonRationalCoefficient { degree: usize, value: String },

    #[error("some product ViVj vanishes at this parameter (octahedron vertex)")]
    VertexDegeneration,

    #[error("the node of the I1 fiber has no multiplicative coordinate")]
    NodePoint,

    #[error("the cusp of the II fiber has no additive coordinate")]
    CuspPoint,

    #[error("input point is a singular point of the cubic")]
    SingularPointInput,

    #[error("input point does not lie on the cubic")]
    NotOnCurve,

    #[error("fiber is confluent at this parameter ({0})")]
    ConfluentCase(&'static str),

    #[error("pair ({0}, {1}) is not one of (1,2), (1,3), (2,3)")]
    BadPair(usize, usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("expression is not a constant")]
    NotConstant,

    #[error("linear factor does not divide the form")]
    NotDivisible,
}
