# Domain settings. Override whole dicts with a YAML mapping in MAREBITO_MAREBITO, MAREBITO_CLASSIFIER or
# MAREBITO_OAI_PMH, or single keys with a key-value config file named by MAREBITO_CONFIG_FILE.
from marebito.business_logic.constants import DEFAULT_BATCH_CAP, DEFAULT_MIN_SCORE, DEFAULT_PAGE_SIZE, DEFAULT_SEED

MAREBITO = {
    'corpus_path': None,
    'model_path': None,
    'links_path': None,
    'index_snapshot_path': None,
    'k': 20,
    'min_score': DEFAULT_MIN_SCORE,
    'seed': DEFAULT_SEED,
    'page_size': DEFAULT_PAGE_SIZE,
    'batch_cap': DEFAULT_BATCH_CAP,
    'host': '127.0.0.1',
    'port': 8555,
}

CLASSIFIER = {
    'kind': 'forest',
    'tree_count': 50,
    'max_depth': 8,
    'feature_subsample': 3,
    'min_samples_split': 2,
    'iterations': 2000,
    'learning_rate': 0.5,
    'l2': 1e-4,
}

REFERENCE_EXTRACTOR = {
    'class': 'marebito.business_logic.refextract.rule_cascade.RuleCascadeExtractor',
    'kwargs': {},
}

OAI_PMH = {
    'repository_name': 'zbMATH Open',
    'base_url': 'https://oai.zbmath.org/v1/',
    'admin_email': 'info@zbmath.org',
    'earliest_datestamp': '1868-01-01',
    'identifier_prefix': 'oai:zbmath.org:',
    'datestamp': '2024-01-01',
}
