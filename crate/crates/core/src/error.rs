use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("needs interior sample: index {index} on a field covering {first}..{end}")]
    NeedsInteriorSample { index: usize, first: usize, end: usize },

    #[error("need at least {min} samples, got {n}")]
    TooFewSamples { n: usize, min: usize },

    #[error("arclength step must be positive and finite, got {0}")]
    InvalidStep(f64),

    #[error("velocity has speed {speed} at sample {index}")]
    NotUnitSpeed { index: usize, speed: f64 },

    #[error("initial frame is not orthonormal (Gram residual {residual:e})")]
    NonOrthonormalFrame { residual: f64 },

    #[error("negative curvature {value} at sample {index}")]
    NegativeCurvature { index: usize, value: f64 },

    #[error("Frenet frame degenerates: curvature vanishes at sample {index} but not along the whole curve")]
    FrenetDegenerate { index: usize },

    #[error("eigen relation vacuous for geodesics: mean curvature vanishes identically")]
    VacuousEigenRelation,

    #[error("no common samples between operator and mean curvature")]
    DisjointSamples,

    #[error("curve is not horizontal: eta(velocity) = {eta:e} at sample {index}")]
    NotHorizontal { index: usize, eta: f64 },

    #[error("unknown operator tag `{0}`")]
    UnknownOperator(String),

    #[error("invalid profile `{0}`")]
    InvalidProfile(String),

    #[error("corpus is empty")]
    EmptyCorpus,
}

pub type Result<T> = std::result::Result<T, GeometryError>;
