from dataclasses import dataclass

from marebito.business_logic.exceptions import ValidationError
from marebito.business_logic.validators import validate_in_range

FEATURE_NAMES = (
    'title_jaccard',
    'title_edit_sim',
    'author_overlap',
    'year_sim',
    'volume_match',
    'pages_match',
    'serial_sim',
    'retrieval_score_norm',
)
FEATURE_COUNT = len(FEATURE_NAMES)


@dataclass(frozen=True)
class FeatureVector:
    values: tuple[float, ...]

    def __len__(self):
        return len(self.values)

    def __getitem__(self, item):
        if isinstance(item, str):
            return self.values[FEATURE_NAMES.index(item)]

        return self.values[item]

    def as_dict(self) -> dict[str, float]:
        return dict(zip(FEATURE_NAMES, self.values))

    def validate(self):
        if len(self.values) != FEATURE_COUNT:
            raise ValidationError(f'Feature vector must contain exactly {FEATURE_COUNT} values')

        for name, value in zip(FEATURE_NAMES, self.values):
            validate_in_range(f'Feature {name}', value, 0, 1)
