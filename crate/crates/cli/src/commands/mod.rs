pub mod legendre;
pub mod obstruction;
pub mod trajectory;
pub mod verify;
