use thiserror::Error;

/// Failures of geometric preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("all homogeneous coordinates are zero")]
    ZeroVector,
    #[error("point is improper (last homogeneous coordinate is zero)")]
    ImproperPoint,
    #[error("points coincide; they do not determine a line")]
    IdenticalPoints,
    #[error("lines coincide; they do not determine a point")]
    IdenticalLines,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("three points of a frame are collinear")]
    DegenerateFrame,
    #[error("points are not pairwise distinct")]
    NotDistinct,
    #[error("points are not collinear")]
    NotCollinear,
    #[error("point lies on the plane through the center parallel to the image plane")]
    NoImage,
    #[error("point coincides with the center of projection")]
    CenterInput,
    #[error("center of projection lies on the plane")]
    CenterOnPlane,
    #[error("direction is parallel to the image plane")]
    DirectionParallel,
    #[error("point does not lie on the plane")]
    NotOnPlane,
    #[error("plane normal is zero")]
    ZeroNormal,
    #[error("nothing projectable remains in the scene")]
    EmptyScene,
    #[error("edge {index} is invalid: {reason}")]
    InvalidEdge { index: usize, reason: &'static str },
}

pub type Result<T, E = GeomError> = std::result::Result<T, E>;
