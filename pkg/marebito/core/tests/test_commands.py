import json
from io import StringIO

from django.core.management import CommandError, call_command

import pytest

from marebito.business_logic.classifier import load_model, save_model
from marebito.business_logic.corpus import load_corpus
from marebito.business_logic.index import load_index_snapshot
from marebito.business_logic.links import save_links
from marebito.business_logic.state import ServiceState
from marebito.business_logic.tests.factories import LinkSourceFactory, ScholixLinkFactory
from marebito.business_logic.utils.synthetic import write_synthetic
from marebito.core.management.base import EXIT_DATA_ERROR, EXIT_INTERNAL_ERROR, EXIT_USAGE_ERROR
from marebito.manage import run

OUTPUT_FILE_NAMES = ('corpus.jsonl', 'gold.jsonl', 'links.jsonl')


def call(*args):
    stdout = StringIO()
    stderr = StringIO()
    call_command(*args, stdout=stdout, stderr=stderr)
    return stdout.getvalue()


@pytest.fixture
def clean_data_paths(tmp_path, clean_dataset, clean_model):
    paths = {
        'corpus': tmp_path / 'corpus.jsonl',
        'gold': tmp_path / 'gold.jsonl',
        'model': tmp_path / 'model.json',
    }
    write_synthetic(clean_dataset, paths['corpus'], paths['gold'])
    save_model(clean_model, paths['model'])
    return {name: str(path) for name, path in paths.items()}


def test_ingest(tmp_path, sample_corpus_path, sample_corpus):
    output = tmp_path / 'normalized.jsonl'

    call('ingest', str(sample_corpus_path), '--output', str(output))

    assert load_corpus(output).generation == sample_corpus.generation


def test_ingest_malformed_corpus(tmp_path):
    source = tmp_path / 'corpus.jsonl'
    source.write_text('{"id": 1, "title": "Fine"}\n{"id": 2,\n', encoding='utf-8')

    with pytest.raises(CommandError) as exc_info:
        call('ingest', str(source), '--output', str(tmp_path / 'out.jsonl'))

    assert exc_info.value.returncode == EXIT_DATA_ERROR
    assert 'Line 2' in str(exc_info.value)


def test_ingest_missing_corpus(tmp_path):
    with pytest.raises(CommandError) as exc_info:
        call('ingest', str(tmp_path / 'absent.jsonl'), '--output', str(tmp_path / 'out.jsonl'))

    assert exc_info.value.returncode == EXIT_DATA_ERROR


def test_unknown_option_is_usage_error(sample_corpus_path):
    with pytest.raises(CommandError) as exc_info:
        call('ingest', str(sample_corpus_path), '--colour', 'red')

    assert exc_info.value.returncode == EXIT_USAGE_ERROR


def test_missing_setting_is_usage_error(tmp_path, settings):
    settings.MAREBITO = dict(settings.MAREBITO, corpus_path=None)

    with pytest.raises(CommandError) as exc_info:
        call('index', '--output', str(tmp_path / 'index.bin'))

    assert exc_info.value.returncode == EXIT_USAGE_ERROR
    assert 'corpus_path' in str(exc_info.value)


def test_unexpected_error_is_internal(monkeypatch, tmp_path, sample_corpus_path):

    def broken_save(*args, **kwargs):
        raise RuntimeError('disk on fire')

    monkeypatch.setattr('marebito.core.management.commands.ingest.save_corpus', broken_save)

    with pytest.raises(CommandError) as exc_info:
        call('ingest', str(sample_corpus_path), '--output', str(tmp_path / 'out.jsonl'))

    assert exc_info.value.returncode == EXIT_INTERNAL_ERROR


def test_bad_config_file_is_data_error(tmp_path, sample_corpus_path):
    config_path = tmp_path / 'marebito.conf'
    config_path.write_text('network.port = 1\n', encoding='utf-8')

    with pytest.raises(CommandError) as exc_info:
        call('ingest', str(sample_corpus_path), '--output', str(tmp_path / 'out.jsonl'), '--config', str(config_path))

    assert exc_info.value.returncode == EXIT_DATA_ERROR


def test_index(tmp_path, sample_corpus_path, sample_corpus):
    output = tmp_path / 'index.bin'

    call('index', '--corpus', str(sample_corpus_path), '--output', str(output), '--compress', 'gz')

    index = load_index_snapshot(output, expected_generation=sample_corpus.generation)
    assert index.doc_count == 6


def test_train_with_config_file(tmp_path, clean_data_paths):
    config_path = tmp_path / 'marebito.conf'
    config_path.write_text(f'corpus_path = {clean_data_paths["corpus"]}\nclassifier.tree_count = 4\n', encoding='utf-8')
    output = tmp_path / 'trained.json'

    call('train', '--gold', clean_data_paths['gold'], '--split', 'all', '--output', str(output), '--config',
         str(config_path))

    model = load_model(output)
    assert model.kind.value == 'forest'
    assert len(model.trees) == 4


def test_train_compare(tmp_path, clean_data_paths):
    output = tmp_path / 'best.json'

    stdout = call(
        'train', '--corpus', clean_data_paths['corpus'], '--gold', clean_data_paths['gold'], '--compare', '--output',
        str(output), '--deterministic'
    )

    comparisons = json.loads(stdout)
    assert [comparison['kind'] for comparison in comparisons] == ['forest', 'linear']
    assert all(comparison['report']['generated_at'] == '1970-01-01T00:00:00Z' for comparison in comparisons)
    assert load_model(output).kind.value in ('forest', 'linear')


def test_eval_perfect_gold(clean_data_paths):
    stdout = call(
        'eval', '--corpus', clean_data_paths['corpus'], '--gold', clean_data_paths['gold'], '--model',
        clean_data_paths['model'], '--deterministic'
    )

    report = json.loads(stdout)
    assert report['counts']['tp'] == 100
    assert report['rn_zero'] is True
    assert report['generated_at'] == '1970-01-01T00:00:00Z'
    assert [(item['alpha'], item['beta']) for item in report['informedness']] == [(1, 1), (2, 2), (5, 5)]
    assert report['informedness'][0]['informedness'] == 1.0


def test_eval_output_file(tmp_path, clean_data_paths):
    output = tmp_path / 'report.json'

    call(
        'eval', '--corpus', clean_data_paths['corpus'], '--gold', clean_data_paths['gold'], '--model',
        clean_data_paths['model'], '--penalties', '3,1', '--output', str(output)
    )

    report = json.loads(output.read_text(encoding='utf-8'))
    assert [(item['alpha'], item['beta']) for item in report['informedness']] == [(3, 1)]


def test_sweep(clean_data_paths):
    stdout = call(
        'sweep', '--corpus', clean_data_paths['corpus'], '--gold', clean_data_paths['gold'], '--model',
        clean_data_paths['model'], '--split', 'all'
    )

    lines = stdout.splitlines()
    assert len(lines) == 34
    assert lines[0].startswith('threshold,')


def test_sweep_bad_thresholds(clean_data_paths):
    with pytest.raises(CommandError) as exc_info:
        call(
            'sweep', '--corpus', clean_data_paths['corpus'], '--gold', clean_data_paths['gold'], '--model',
            clean_data_paths['model'], '--thresholds', '1.0:0.5:0.1'
        )

    assert exc_info.value.returncode == EXIT_DATA_ERROR


def test_match_citation(clean_dataset, clean_data_paths):
    item = next(item for item in clean_dataset.gold if item.expected_id is not None)

    stdout = call(
        'match', item.input, '--corpus', clean_data_paths['corpus'], '--model', clean_data_paths['model']
    )

    result = json.loads(stdout)
    assert result['query_raw'] == item.input
    assert result['matched_id'] == item.expected_id
    assert result['error'] is None


def test_match_input_file(tmp_path, clean_dataset, clean_data_paths):
    input_path = tmp_path / 'citations.txt'
    structured = json.dumps({'title': 'Elliptic curves', 'year': 'soon'})
    input_path.write_text(f'{clean_dataset.gold[0].input}\n\n{structured}\n', encoding='utf-8')
    output = tmp_path / 'results.jsonl'

    call(
        'match', '--input', str(input_path), '--output', str(output), '--corpus', clean_data_paths['corpus'],
        '--model', clean_data_paths['model']
    )

    results = [json.loads(line) for line in output.read_text(encoding='utf-8').splitlines()]
    assert len(results) == 2
    assert results[0]['matched_id'] == clean_dataset.gold[0].expected_id
    assert results[1]['error'] == 'InvalidField'


def test_match_needs_exactly_one_input(clean_data_paths):
    with pytest.raises(CommandError) as exc_info:
        call('match', '--corpus', clean_data_paths['corpus'], '--model', clean_data_paths['model'])

    assert exc_info.value.returncode == EXIT_USAGE_ERROR


def test_synth_is_deterministic(tmp_path):
    outputs = []
    for name in ('first', 'second'):
        directory = tmp_path / name
        directory.mkdir()
        call(
            'synth', '--records', '40', '--gold', '10', '--seed', '7', '--links', '5', '--corpus-output',
            str(directory / 'corpus.jsonl'), '--gold-output', str(directory / 'gold.jsonl'), '--links-output',
            str(directory / 'links.jsonl')
        )
        outputs.append([(directory / file_name).read_bytes() for file_name in OUTPUT_FILE_NAMES])

    assert outputs[0] == outputs[1]
    assert len(load_corpus(tmp_path / 'first' / 'corpus.jsonl')) == 40


def test_synth_links_need_output(tmp_path, settings):
    settings.MAREBITO = dict(settings.MAREBITO, links_path=None)

    with pytest.raises(CommandError) as exc_info:
        call(
            'synth', '--records', '10', '--gold', '2', '--links', '3', '--corpus-output',
            str(tmp_path / 'corpus.jsonl'), '--gold-output', str(tmp_path / 'gold.jsonl')
        )

    assert exc_info.value.returncode == EXIT_USAGE_ERROR


def test_synth_bad_config(tmp_path):
    with pytest.raises(CommandError) as exc_info:
        call(
            'synth', '--records', '0', '--corpus-output', str(tmp_path / 'corpus.jsonl'), '--gold-output',
            str(tmp_path / 'gold.jsonl')
        )

    assert exc_info.value.returncode == EXIT_DATA_ERROR


def write_sample_links(path):
    links = [
        ScholixLinkFactory(
            source=LinkSourceFactory(object_id=f'bib{number}', url=f'https://dlmf.nist.gov/bib/#bib{number}'),
            target=target,
        ) for number, target in enumerate((2, 3, 4, 99), start=1)
    ]
    save_links(links, path)


def test_links_stats(tmp_path, sample_corpus_path):
    links_path = tmp_path / 'links.jsonl'
    write_sample_links(links_path)

    stats = json.loads(call('links_stats', '--corpus', str(sample_corpus_path), '--links', str(links_path)))

    assert stats['link_count'] == 3
    assert stats['reject_count'] == 1


def test_serve(monkeypatch, sample_corpus_path):
    calls = []

    class FakeCommandLineInterface:

        def run(self, args):
            calls.append(args)

    monkeypatch.setattr('marebito.core.management.commands.serve.CommandLineInterface', FakeCommandLineInterface)

    call('serve', '--corpus', str(sample_corpus_path), '--host', '0.0.0.0', '--port', '9000')

    assert calls == [['--bind', '0.0.0.0', '--port', '9000', 'marebito.project.asgi:application']]
    assert len(ServiceState.get_instance().corpus) == 6


def test_run_returns_exit_codes(tmp_path, sample_corpus_path, capsys):
    links_path = tmp_path / 'links.jsonl'
    write_sample_links(links_path)

    assert run(['manage.py', 'links-stats', '--corpus', str(sample_corpus_path), '--links', str(links_path)]) == 0
    assert json.loads(capsys.readouterr().out)['link_count'] == 3

    assert run(['manage.py', 'ingest']) == EXIT_USAGE_ERROR
    assert run(['manage.py', 'ingest', str(tmp_path / 'absent.jsonl'), '--output', str(tmp_path / 'out')]) == 2
    assert run(['manage.py', 'no-such-command']) == 1
