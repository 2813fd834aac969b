from django.db import migrations, models
import django.db.models.deletion


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name='ExperimentRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('source', models.CharField(max_length=200)),
                ('index_name', models.CharField(choices=[('cr', 'Conceptual relevance'), ('stability', 'Stability')], default='cr', max_length=20)),
                ('activation', models.CharField(default='arithmetic', max_length=20)),
                ('stability_method', models.CharField(default='brute', max_length=10)),
                ('ratio', models.FloatField(default=0.5)),
                ('seed', models.BigIntegerField(blank=True, null=True)),
                ('split', models.CharField(choices=[('random', 'Random'), ('mirror', 'Mirror')], default='random', max_length=10)),
                ('n', models.PositiveIntegerField(default=0)),
                ('xi', models.FloatField(blank=True, help_text='Pearson coefficient; empty when undefined', null=True)),
                ('tau_seconds', models.FloatField(default=0.0)),
                ('dropped', models.PositiveIntegerField(default=0)),
                ('created', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'ordering': ['-created', '-id'],
                'indexes': [models.Index(fields=['-created'], name='benchmark_run_created_idx')],
            },
        ),
        migrations.CreateModel(
            name='SharedConceptScore',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('intent', models.TextField(blank=True)),
                ('x', models.FloatField()),
                ('y', models.FloatField()),
                ('reference_id', models.PositiveIntegerField()),
                ('test_id', models.PositiveIntegerField()),
                ('run', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='scores', to='benchmark.experimentrun')),
            ],
            options={
                'ordering': ['id'],
            },
        ),
    ]
