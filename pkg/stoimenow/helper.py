from multiprocessing import Pool
from typing import Callable, Sequence, List


def parallel_map(function: Callable, items: Sequence, jobs: int = 1) -> List:
    """
    `[function(item) for item in items]`, optionally spread over `jobs` worker processes.
    The result order always follows `items`.

    Args:
        function: module-level function so that it can be pickled
        items: arguments, one call each
        jobs: number of processes, 1 or less runs in the calling process
    """
    if jobs <= 1 or len(items) <= 1:
        return [function(item) for item in items]
    with Pool(processes=min(jobs, len(items))) as pool:
        return pool.map(function, items)


def fit_image_size(img_res, max_width, max_height):
    image_aspect = img_res[0] / img_res[1]
    max_aspect = max_width / max_height
    if image_aspect > max_aspect:  # wide image: fit width
        return max_width, max(1, int(round(img_res[1] * max_width / img_res[0])))
    else:  # narrow image: fit height
        return max(1, int(round(img_res[0] * max_height / img_res[1]))), max_height
