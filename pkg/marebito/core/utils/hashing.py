import json
from hashlib import sha3_256


def normalize_dict(dict_: dict) -> bytes:
    return json.dumps(dict_, separators=(',', ':'), sort_keys=True, ensure_ascii=False).encode('utf-8')


def hash_normalized_dicts(dicts) -> str:
    hasher = sha3_256()
    for dict_ in dicts:
        hasher.update(normalize_dict(dict_))
        hasher.update(b'\n')

    return hasher.digest().hex()
