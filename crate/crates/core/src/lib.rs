pub mod caratheodory;
pub mod coefficients;
pub mod error;
pub mod identity;
pub mod linalg;
pub mod poly;
pub mod sampling;
pub mod scalar;
pub mod series;
pub mod theta;
pub mod critical;
pub mod regions;
pub mod search;
pub mod cli;
