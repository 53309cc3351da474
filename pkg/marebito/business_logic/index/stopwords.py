"""
Shipped stopword list. Every entry is stored in its normalized form (lowercase, ASCII-folded),
so German "für" appears as "fur". Changing this list changes every retrieval score.
"""

ENGLISH_STOPWORDS = frozenset((
    'about', 'above', 'after', 'again', 'against', 'all', 'also', 'am', 'among', 'an', 'and', 'another', 'any',
    'are', 'as', 'at', 'be', 'because', 'been', 'before', 'being', 'below', 'between', 'both', 'but', 'by',
    'can', 'cannot', 'could', 'did', 'do', 'does', 'doing', 'done', 'down', 'during', 'each', 'either', 'else',
    'even', 'ever', 'every', 'few', 'for', 'from', 'further', 'had', 'has', 'have', 'having', 'he', 'her',
    'here', 'hers', 'herself', 'him', 'himself', 'his', 'how', 'however', 'if', 'in', 'into', 'is', 'it', 'its',
    'itself', 'just', 'least', 'less', 'like', 'many', 'may', 'me', 'might', 'more', 'most', 'much', 'must',
    'my', 'myself', 'neither', 'no', 'nor', 'not', 'now', 'of', 'off', 'often', 'on', 'once', 'one', 'only',
    'onto', 'or', 'other', 'others', 'otherwise', 'our', 'ours', 'ourselves', 'out', 'over', 'own', 'per',
    'quite', 'rather', 'same', 'shall', 'she', 'should', 'since', 'so', 'some', 'such', 'than', 'that', 'the',
    'their', 'theirs', 'them', 'themselves', 'then', 'there', 'thereby', 'therefore', 'these', 'they', 'this',
    'those', 'though', 'through', 'thus', 'to', 'too', 'toward', 'towards', 'under', 'until', 'up', 'upon',
    'us', 'very', 'via', 'was', 'we', 'were', 'what', 'when', 'where', 'whereas', 'whether', 'which', 'while',
    'who', 'whom', 'whose', 'why', 'will', 'with', 'within', 'without', 'would', 'yet', 'you', 'your',
))

GERMAN_STOPWORDS = frozenset((
    'aber', 'als', 'am', 'an', 'auch', 'auf', 'aus', 'bei', 'bis', 'das', 'dass', 'dem', 'den', 'der', 'des',
    'die', 'doch', 'durch', 'ein', 'eine', 'einem', 'einen', 'einer', 'eines', 'es', 'fur', 'gegen', 'hat',
    'ihre', 'im', 'in', 'ist', 'mit', 'nach', 'nicht', 'noch', 'oder', 'ohne', 'sich', 'sie', 'sind', 'so',
    'uber', 'um', 'und', 'unter', 'vom', 'von', 'vor', 'wie', 'wird', 'zu', 'zum', 'zur', 'zwischen',
))

STOPWORDS = ENGLISH_STOPWORDS | GERMAN_STOPWORDS
