# Corpus services: ingestion (plain / counted), export, selection and statistics.
