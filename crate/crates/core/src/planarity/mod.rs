pub mod apex;
pub mod dmp;
pub mod rotation;

pub use apex::{apex_order_pqtree, apex_order_pqtree_anchored};
pub use dmp::{blocks, is_planar, planar_rotation};
pub use rotation::{for_each_rotation, rotation_count, same_embedding, Dart, Rotation};
