from marebito.core.utils.importing import import_from_string, instantiate_from_settings


def test_import_from_string():
    class_ = import_from_string('marebito.business_logic.refextract.rule_cascade.RuleCascadeExtractor')
    from marebito.business_logic.refextract.rule_cascade import RuleCascadeExtractor
    assert class_ is RuleCascadeExtractor


def test_instantiate_from_settings():
    instance = instantiate_from_settings({
        'class': 'marebito.business_logic.matcher.MatchConfig',
        'kwargs': {
            'k': 5
        },
    })
    assert instance.k == 5
