"""Order-preserving fan-out of independent evaluations over a process pool."""
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from tqdm import tqdm

from src.utils.config import resolve_workers

T = TypeVar('T')
R = TypeVar('R')


def parallel_map(func: Callable[[T], R], items: Iterable[T],
                 workers: Optional[int] = None,
                 desc: Optional[str] = None,
                 progress: bool = False) -> List[R]:
    """
    Apply func to every item and return the results in input order.

    func must be a module-level function and items picklable when more than
    one worker is used. One worker runs everything in-process.

    Args:
        func (Callable[[T], R]): Function applied to each item
        items (Iterable[T]): Work items
        workers (Optional[int]): Pool width, defaults to resolve_workers()
        desc (Optional[str]): Progress bar label
        progress (bool): Show a tqdm progress bar

    Returns:
        List[R]: Results, one per item, in input order
    """
    items = list(items)
    workers = workers if workers is not None else resolve_workers()
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in tqdm(items, desc=desc, disable=not progress)]

    chunksize = max(1, len(items) // (4 * workers))
    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(tqdm(pool.map(func, items, chunksize=chunksize), total=len(items),
                         desc=desc, disable=not progress))
