//! Data-parallel helpers. With the `parallel` feature (default) the sums over
//! partitions and conjugacy classes run on rayon; without it everything runs
//! sequentially with identical results, since the arithmetic is exact.

#[cfg(feature = "parallel")]
pub fn map_reduce<I, T, F, Z, C>(items: Vec<I>, map: F, zero: Z, combine: C) -> T
where
    I: Send,
    T: Send,
    F: Fn(I) -> T + Sync + Send,
    Z: Fn() -> T + Sync + Send,
    C: Fn(T, T) -> T + Sync + Send,
{
    use rayon::prelude::*;
    items
        .into_par_iter()
        .map(map)
        .reduce(&zero, &combine)
}

#[cfg(not(feature = "parallel"))]
pub fn map_reduce<I, T, F, Z, C>(items: Vec<I>, map: F, zero: Z, combine: C) -> T
where
    I: Send,
    T: Send,
    F: Fn(I) -> T + Sync + Send,
    Z: Fn() -> T + Sync + Send,
    C: Fn(T, T) -> T + Sync + Send,
{
    items.into_iter().map(map).fold(zero(), combine)
}

/// Map over items, preserving order of the results.
#[cfg(feature = "parallel")]
pub fn map_collect<I, T, F>(items: Vec<I>, map: F) -> Vec<T>
where
    I: Send,
    T: Send,
    F: Fn(I) -> T + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(map).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<I, T, F>(items: Vec<I>, map: F) -> Vec<T>
where
    I: Send,
    T: Send,
    F: Fn(I) -> T + Sync + Send,
{
    items.into_iter().map(map).collect()
}

/// True when this build dispatches work onto rayon.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
