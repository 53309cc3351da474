from collections import Counter
from typing import Hashable, Iterable


def deep_update(base_dict, update_with):
    for key, value in update_with.items():
        if isinstance(value, dict):
            base_dict_value = base_dict.get(key)
            if isinstance(base_dict_value, dict):
                deep_update(base_dict_value, value)
            else:
                base_dict[key] = value
        else:
            base_dict[key] = value

    return base_dict


def sorted_histogram(keys: Iterable[Hashable]) -> dict:
    """Count `keys` and order the result by descending count, then ascending key."""
    counter = Counter(keys)
    return dict(sorted(counter.items(), key=lambda item: (-item[1], item[0])))
