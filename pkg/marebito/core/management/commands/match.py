import json

from django.core.management import CommandError

from marebito.business_logic.exceptions import DataIOError
from marebito.business_logic.matcher import match_batch
from marebito.core.management.base import MarebitoCommand
from marebito.core.utils.atomic_write import write_lines_atomic


def read_inputs(path):
    """One citation per line; lines holding a JSON object are structured field maps."""
    try:
        with open(path, encoding='utf-8') as fo:
            lines = [line.rstrip('\n') for line in fo]
    except OSError as ex:
        raise DataIOError(f'Could not read {path}: {ex}') from ex

    inputs = []
    for line in lines:
        if not line.strip():
            continue

        if line.lstrip().startswith('{'):
            try:
                inputs.append(json.loads(line))
                continue
            except json.JSONDecodeError:
                pass

        inputs.append(line)

    return inputs


class Command(MarebitoCommand):
    help = 'Match citations against the corpus and print one result per line'  # noqa: A003

    def add_arguments(self, parser):
        parser.add_argument('citation', nargs='?', help='Citation string')
        parser.add_argument('--input', help='File with one citation per line')
        parser.add_argument('--output', help='Results JSONL path (defaults to stdout)')
        parser.add_argument('--corpus', help='Corpus path')
        parser.add_argument('--model', help='Model path')
        parser.add_argument('--k', type=int)
        parser.add_argument('--min-score', type=float)

    def run(self, citation=None, input=None, output=None, **options):  # noqa: A002
        if (citation is None) == (input is None):
            raise CommandError('Pass either a citation or --input')

        inputs = [citation] if citation is not None else read_inputs(input)
        corpus = self.load_corpus(options.get('corpus'))
        index = self.load_index(corpus)
        model = self.load_model(options.get('model'))
        config = self.get_match_config(k=options.get('k'), min_score=options.get('min_score'))

        results = match_batch(inputs, index, corpus, model, config)
        lines = [json.dumps(result.serialize_to_dict(skip_none_values=False), ensure_ascii=False) for result in results]
        if output:
            write_lines_atomic(output, lines)
            matched_count = sum(result.is_matched for result in results)
            self.write_summary(f'Matched {matched_count} of {len(results)} citations, results in {output}')
        else:
            for line in lines:
                self.stdout.write(line)
