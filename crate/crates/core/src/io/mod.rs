pub mod csv;
pub mod manifest;
pub mod svg;
