#!/usr/bin/env python3
"""Generate the bundled synthetic corpus, dictionaries and reference collections.

Everything under data/corpus, data/dict and data/reference is produced by this
script from a fixed seed, so the files can be regenerated byte for byte:

    python3 tools/gen_synthetic_corpus.py --out data

Jokes come from humorous accounts and carry the planted signals the classifier
is expected to pick up: dialog turns, question/answer pairs, joke keywords,
exclamations, animals and informal spellings. Non-humorous tweets are news,
reflections and curious facts. A few curious facts are phrased as questions
about animals so the signals are not perfectly clean.

Annotation sessions vote at human pace (several seconds apart). Two extra
sessions vote in sub-second bursts; the burst filter is expected to drop them.
"""

import argparse
import json
import random
import re
import unicodedata
from pathlib import Path

SEED = 20170601

HUMOROUS_ACCOUNTS = ["ChistesCortos", "HumorDiario", "JaimitoOficial"]
NEWS_ACCOUNTS = ["NoticiasHoy", "DiarioNacional", "InfoMundo"]
REFLECTION_ACCOUNTS = ["FrasesDeVida", "PiensaPositivo", "AlmaSerena"]
FACT_ACCOUNTS = ["DatosCuriosos", "SabiasQue", "CienciaFacil"]

NAMES = ["Jaimito", "Pepito", "Juanito", "Manolito"]
ANIMALS = ["perro", "gato", "pato", "elefante", "pulpo", "caracol", "burro", "loro", "mono", "pez", "vaca", "tortuga"]
ADULTS = ["la profesora", "el doctor", "la suegra", "el camarero", "el cura", "el abogado"]

# Dialog jokes. Each line after the first opens with a dash.
DIALOGS = [
    "- Mamá, ¿puedo salir a jugar?\n- ¡No! Primero haz los deberes.\n- ¡Pero si ya los hice ayer!",
    "- Doctor, ¿es grave lo mío?\n- Depende, ¿tiene usted seguro?\n- No.\n- ¡Entonces es gravísimo!",
    "- {name}, ¿por qué llegas tarde?\n- Porque vi un cartel que decía: escuela, vaya despacio.",
    "- Camarero, hay un {animal} en mi sopa.\n- Tranquilo señor, ¡no se come mucho!",
    "- {name}, dime una palabra que empiece con D.\n- Ayer.\n- ¡Eso no empieza con D!\n- Claro que sí, ayer fue domingo.",
    "- Papá, ¿qué se siente tener un hijo tan guapo?\n- No sé hijo, pregúntale a tu abuelo.",
    "- Oye, ¿cuál es tu plato favorito?\n- El hondo, porque cabe más comida.",
    "- ¿Me pasas la sal?\n- ¡Claro!\n- Gracias.\n- ¿Y cuándo me la devuelves?",
    "- Doctor, tengo complejo de feo.\n- ¿Complejo? ¡Usted es feo de verdad!",
    "- {name}, conjuga el verbo caminar.\n- Yo camino, tú caminas, él camina...\n- ¡Más rápido!\n- Yo corro, tú corres, él corre.",
    "- Cariño, ¿qué me vas a regalar por mi cumpleaños?\n- ¿Ves aquel coche rojo?\n- ¡Sí!\n- Pues un llavero del mismo color.",
    "- Mi {animal} sabe hablar.\n- ¡No me digas!\n- Sí, pero solo dice lo que quiere.",
    "- Señora, su hijo me ha copiado en el examen.\n- ¿Cómo lo sabe?\n- La pregunta cuatro: yo no lo sé, y él puso: yo tampoco.",
    "- ¿Sabes que me casé con una mujer que cocina fatal?\n- ¿Y por qué te casaste?\n- ¡Porque besaba muy bien!",
    "- Abuela, ¿por qué tienes los ojos tan grandes?\n- ¡Para verte mejor!\n- ¿Y ese celular tan grande?\n- Para ver el WhatsApp, chiquito.",
    "- {name}, ¿qué es un círculo?\n- Una línea que dio la vuelta y se encontró consigo misma.",
    "- Oye, ¿tú qué opinas de la suegra?\n- ¿La tuya o la mía?\n- ¡La que sea!\n- Que las dos se parecen a un {animal}.",
    "- Jefe, ¿me puede subir el sueldo?\n- ¿Por qué?\n- ¡Porque ya no le llega al suelo!",
]

QA_JOKES = [
    "¿Qué le dice un {animal} a otro {animal}? ¡Nada, porque los {animal_pl} no hablan!",
    "¿Qué hace un {animal} en una biblioteca? ¡Buscando el libro de cómo dejar de ser {animal}!",
    "¿Por qué el {animal} cruzó la calle? ¡Para llegar al otro lado, jajaja!",
    "¿Cuál es el colmo de un {animal}? ¡Tener miedo a las alturas!",
    "¿Qué le dijo una impresora a otra? ¿Esa hoja es tuya o es impresión mía?",
    "¿Por qué los esqueletos no pelean entre ellos? Porque no tienen agallas, jajaja.",
    "¿Qué hace una abeja en el gimnasio? ¡Zumba!",
    "¿Qué le dice una iguana a su hermana gemela? ¡Somos iguanitas!",
    "¿Cómo se dice pañuelo en japonés? Saka moko. ¡Jajaja!",
    "¿Qué le dice el café al azúcar? ¡Sin ti mi vida es amarga!",
    "¿Qué le dijo el uno al diez? ¡Para ser como yo tienes que ser sincero!",
    "¿Cuál es el colmo de un electricista? ¡Que su mujer se llame Luz y sus hijos le sigan la corriente!",
    "¿Por qué {name} lleva una escalera al colegio? ¡Porque quiere ir a secundaria!",
    "¿Qué le dice {adult} a {name}? ¡Deja de contar chistes en clase! Y {name} contesta: ¡pero si usted se ríe!",
]

KEYWORD_JOKES = [
    "Le dice {adult} a {name}: ¿por qué no hiciste la tarea? Y {name} responde: ¡porque soy alérgico al trabajo!",
    "Va un borracho al bar y le dice al camarero: ¡póngame un chiste corto! Y el camarero contesta: jajaja",
    "Mi suegra dice que me quiere como a un hijo. ¡Por eso nunca me deja comer tranquilo, jajaja!",
    "Un abogado le dice a su cliente: tengo una buena y una mala noticia. ¡La mala es que me tiene que pagar!",
    "Entra un {animal} a una cantina y dice: ¡una cerveza, por favor! ¡Y el camarero se desmaya!",
    "La profesora pregunta: {name}, ¿cuántos dedos tienes? Y {name} contesta: ¡diez, pero los pies no cuentan!",
    "Mi mamá me dijo que fuera a dormir. ¡Y yo le dije que ya estaba en la cama con el celular, jajaja!",
    "Un loco le dice a otro loco: ¡mira, un {animal} volando! Y el otro responde: ¡uy, qué miedo, agáchate!",
    "El doctor me dijo que dejara de comer dulces. ¡Pues busqué otro doctor, jajaja!",
    "CHISTE DEL DÍA: ¿por qué el mar no se seca? ¡Porque no tiene toalla!",
    "{name} le dice a su papá: ¡papá, hoy salvé a un niño en el colegio! ¿Ah sí? ¡Sí, me comí su almuerzo!",
    "Le dice la esposa al marido: ¡me voy con mi mamá! Y el marido contesta: ¡perfecto, ve con ella y no vuelvas las dos!",
]

JOKE_TAILS = ["", "", "", " #chiste", " #humor", " jajaja", " 😂", " #chistes jaja"]

HUMOROUS_NON_JOKES = [
    "Buenos días a todos, feliz lunes.",
    "Gracias por los {n} mil seguidores.",
    "Mañana subimos nuevo contenido, estén atentos.",
    "Síguenos también en nuestra página oficial.",
    "Hoy no hay publicación, volvemos el {day}.",
    "Feliz fin de semana para todos nuestros seguidores.",
    "Estamos preparando una sorpresa para el {day}.",
    "Recuerden compartir nuestras publicaciones con sus amigos.",
    "Buenas noches, descansen.",
]

NEWS = [
    "El gobierno anunció hoy un nuevo plan de {topic} para la región {region}.",
    "La bolsa cerró la jornada con una subida del {n} por ciento.",
    "El ministerio de salud informó sobre la campaña de vacunación en {city}.",
    "Las autoridades de {city} presentaron el presupuesto para el próximo año.",
    "Se inauguró el nuevo hospital público de {city} con capacidad para {n} camas.",
    "El congreso aprobó la ley de {topic} tras un largo debate parlamentario.",
    "La selección nacional ganó el partido por {n} goles a uno.",
    "Aumenta el precio del combustible por tercera semana consecutiva.",
    "El servicio meteorológico prevé lluvias intensas en la región {region}.",
    "La universidad de {city} abrió la inscripción para los cursos de verano.",
    "El presidente se reunió con representantes del sector agrícola en {city}.",
    "La empresa estatal anunció inversiones en energía renovable.",
    "Detienen a dos personas por robo en el centro de {city}.",
    "El tráfico en la autopista {region} se encuentra cortado por obras.",
]

REFLECTIONS = [
    "La paciencia es la clave del éxito.",
    "Cada día es una nueva oportunidad para crecer.",
    "Nunca dejes de creer en tus sueños.",
    "La felicidad no es un destino, es una forma de viajar.",
    "El tiempo es el recurso más valioso que tenemos.",
    "Quien no arriesga no gana.",
    "Las personas fuertes no nacen, se construyen con esfuerzo.",
    "Agradece lo que tienes mientras trabajas por lo que quieres.",
    "El silencio también es una respuesta.",
    "La vida es corta, sonríe mientras tengas dientes.",
    "Un pequeño paso cada día lleva a grandes cambios.",
    "La humildad es la base de la grandeza.",
    "Aprende del pasado, vive el presente y confía en el futuro.",
    "Rodéate de personas que te hagan mejor.",
    "El fracaso es solo una oportunidad para comenzar de nuevo con más inteligencia.",
    "Lo importante no es cuánto tienes sino cuánto disfrutas.",
    "Las palabras amables pueden ser cortas, pero su eco es infinito.",
    "Cuida tu mente, es el lugar donde vives.",
]

REFLECTION_TAILS = ["", "", " #reflexión", " #motivación", " #frases", " Buenas noches."]

FACTS = [
    "El {animal} puede vivir hasta {n} años en condiciones naturales.",
    "La Gran Muralla China mide más de veinte mil kilómetros de longitud.",
    "El corazón humano late unas cien mil veces al día.",
    "La miel no se estropea nunca si se conserva correctamente.",
    "Los pulpos tienen tres corazones y sangre de color azul.",
    "El planeta Venus gira en sentido contrario al resto de los planetas.",
    "Un rayo es cinco veces más caliente que la superficie del sol.",
    "El cerebro humano contiene unos ochenta y seis mil millones de neuronas.",
    "La Torre Eiffel puede crecer unos quince centímetros en verano.",
    "Las jirafas duermen menos de dos horas diarias.",
    "El agua cubre aproximadamente el setenta por ciento de la superficie terrestre.",
    "El idioma español es la lengua materna de casi quinientos millones de personas.",
    "Los koalas duermen hasta veinte horas al día.",
    "La luz del sol tarda ocho minutos en llegar a la Tierra.",
]

# Phrased like a question/answer pair and about animals, on purpose.
FACT_QUESTIONS = [
    "¿Sabías que el {animal} tiene un sentido del olfato muy desarrollado? Así encuentra su alimento.",
    "¿Sabías que las abejas se comunican mediante danzas? Así indican dónde hay flores.",
    "¿Por qué los flamencos son rosados? Por los pigmentos de los crustáceos que comen.",
]

FACT_TAILS = ["", "", " #ciencia", " #datoscuriosos", " #sabíasque"]

CITIES = ["Madrid", "Montevideo", "Bogotá", "Lima", "Sevilla", "Córdoba", "Valencia", "Quito", "Rosario"]
REGIONS = ["norte", "sur", "este", "oeste", "central", "costera"]
TOPICS = ["infraestructura", "educación", "vivienda", "transporte", "seguridad", "empleo"]
DAYS = ["lunes", "martes", "miércoles", "jueves", "viernes"]

PLURALS = {"pez": "peces", "caracol": "caracoles"}

# Jokes, as on a joke site. Used for the topic-distance reference only.
REFERENCE_JOKES = [
    "Le dice un niño a su mamá: mamá, en el colegio me llaman despistado. Y la mamá le contesta: niño, tú vives en la casa de enfrente.",
    "¿Qué le dice una pared a otra pared? Nos vemos en la esquina.",
    "Un señor entra a una tienda y pregunta: ¿tienen libros sobre el cansancio? Y el vendedor responde: están agotados.",
    "- Doctor, doctor, nadie me hace caso.\n- ¡Siguiente!",
    "¿Qué le dice un gusano a otro gusano? Voy a dar una vuelta a la manzana.",
    "Jaimito le dice a su papá: papá, hoy me porté como un caballero. Y el papá responde: ¿ah sí? Sí, le cedí mi asiento a la profesora cuando me expulsó.",
    "Había una vez un perro que se llamaba Pegamento, se cayó y se pegó.",
    "- Mamá, mamá, en el colegio me dicen mentiroso.\n- Tú no vas al colegio, hijo.",
    "¿Cuál es el colmo de un jardinero? Que su novia se llame Rosa y lo deje plantado.",
    "Un borracho llega a su casa y le dice a su esposa: cariño, no estoy borracho, solo estoy muy contento.",
    "Va un caracol y se cae de un árbol. Y dice: ¡uf, qué rápido va todo!",
    "¿Por qué las focas miran siempre hacia arriba? Porque ahí están los focos.",
    "La suegra le pregunta al yerno: ¿me quieres? Y el yerno contesta: claro que sí, suegra, de lejos la quiero mucho.",
    "- Oye, ¿cómo se llama tu perro?\n- No sé, no me lo ha dicho.",
    "Un abogado le dice a otro: ¿cuánto cobras por una pregunta? Mil pesos por tres preguntas. ¿No es un poco caro? Sí, ¿cuál es tu última pregunta?",
    "¿Qué le dice el pato a la pata? Vamos a tener que hablar seriamente.",
    "Pepito le pregunta a la maestra: ¿usted me castigaría por algo que no hice? No, claro que no. Pues no hice la tarea.",
    "Entra un hombre al médico y le dice: doctor, me duele aquí, aquí y aquí. Y el doctor contesta: usted tiene el dedo roto.",
    "¿Qué le dice un semáforo a otro? No me mires que me estoy cambiando.",
    "- Camarero, este filete tiene muchos nervios.\n- Normal, es la primera vez que se lo comen.",
    "¿Por qué el libro de matemáticas está triste? Porque tiene muchos problemas.",
    "Un loco le pregunta a otro: ¿qué hora es? Y el otro responde: las tres. ¡Qué raro, llevo todo el día preguntando y cada uno me dice una distinta!",
    "Mi mujer me dijo que la tratara como a una reina, así que la mandé a vivir a otro país.",
    "¿Cómo se despiden los químicos? Ácido un placer.",
    "- ¿Cuál es tu animal favorito?\n- El pollo asado.",
    "Un elefante se mira al espejo y dice: ¡qué horror, otra vez me salió la trompa!",
    "Le dice la maestra a Jaimito: dime dos pronombres. Y Jaimito contesta: ¿quién, yo?",
    "¿Qué le dijo el cero al ocho? Bonito cinturón.",
    "Un cura le dice al monaguillo: ¿sabes por qué no puedes decir mentiras? Porque te crece la nariz, jajaja.",
    "- Papá, ¿qué se siente tener un hijo tan inteligente?\n- No lo sé, pregúntale a tu abuelo.",
]

# Encyclopedia-style sentences for the topic-distance reference.
REFERENCE_ENCYCLOPEDIA = [
    "La ciudad fue fundada en el siglo dieciséis por colonos procedentes de la península.",
    "El río nace en la cordillera y desemboca en el océano tras recorrer más de mil kilómetros.",
    "La especie habita en bosques templados y se alimenta principalmente de insectos y semillas.",
    "El edificio es de estilo gótico y fue declarado monumento nacional en el año mil novecientos.",
    "La población del municipio supera los cien mil habitantes según el último censo.",
    "El compositor estudió en el conservatorio y escribió numerosas obras para orquesta.",
    "La economía de la región se basa en la agricultura, la ganadería y el turismo.",
    "El tratado fue firmado por ambos países y estableció las fronteras actuales.",
    "La universidad cuenta con facultades de medicina, derecho, ingeniería y ciencias sociales.",
    "El clima es mediterráneo, con veranos secos y calurosos e inviernos suaves.",
    "La proteína interviene en el transporte de oxígeno a través de la sangre.",
    "El equipo disputó la final del campeonato nacional durante tres temporadas consecutivas.",
    "El volcán registró su última erupción a comienzos del siglo pasado.",
    "La lengua pertenece a la familia indoeuropea y cuenta con varios dialectos regionales.",
    "El museo alberga una colección de pinturas y esculturas de la época medieval.",
    "El satélite orbita el planeta a una distancia media de trescientos mil kilómetros.",
    "La obra se publicó por primera vez en la capital y fue traducida a varios idiomas.",
    "El parque nacional protege una gran diversidad de plantas y animales autóctonos.",
    "La dinastía gobernó el territorio durante más de dos siglos hasta su caída.",
    "El mineral se utiliza en la industria para la fabricación de vidrio y cerámica.",
    "La provincia limita al norte con la montaña y al sur con el mar.",
    "El escritor recibió el premio nacional de literatura por su obra narrativa.",
    "El sistema de transporte incluye líneas de metro, autobuses y trenes de cercanías.",
    "La catedral fue construida entre los siglos trece y quince sobre una antigua mezquita.",
    "El mamífero se distribuye por las regiones tropicales del continente americano.",
    "La constitución establece la división de poderes y los derechos fundamentales.",
    "El científico investigó las propiedades de la luz y publicó varios tratados de física.",
    "La festividad se celebra cada año en el mes de agosto con procesiones y música.",
    "El puerto es uno de los más importantes del país por el volumen de mercancías.",
    "La montaña alcanza una altitud de casi cinco mil metros sobre el nivel del mar.",
]

# Informal spellings and internet words: absent from the base dictionary.
INFORMAL = {"jajaja", "jaja", "jeje", "jsjs", "xd", "porfa", "finde", "whatsapp", "celular"}
WEB_ONLY = {"jajaja", "jaja", "whatsapp", "celular", "finde"}
WIKTIONARY_ONLY = {"jeje", "porfa", "xd", "celular"}


def strip_accents(s):
    return "".join(c for c in unicodedata.normalize("NFD", s) if unicodedata.category(c) != "Mn")


def words_of(text):
    return [strip_accents(w.lower()) for w in re.findall(r"[^\W\d_]+", text)]


def fill(rng, template):
    animal = rng.choice(ANIMALS)
    values = {
        "name": rng.choice(NAMES),
        "animal": animal,
        "animal_pl": PLURALS.get(animal, animal + "s"),
        "adult": rng.choice(ADULTS),
        "n": str(rng.randint(2, 40)),
        "city": rng.choice(CITIES),
        "region": rng.choice(REGIONS),
        "topic": rng.choice(TOPICS),
        "day": rng.choice(DAYS),
    }
    text = template.format(**values)
    return text[0].upper() + text[1:] if text[0].islower() else text


def news_tail(rng, i):
    return rng.choice(["", f" https://t.co/n{i:04d}", " #noticias", f" https://t.co/a{i:04d} #última"])


def unique_texts(rng, templates, tails, count, tail_fn=None):
    seen = set()
    out = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 20000:
            raise RuntimeError("not enough distinct texts")
        text = fill(rng, rng.choice(templates))
        text += tail_fn(rng, len(out)) if tail_fn else rng.choice(tails)
        if text not in seen:
            seen.add(text)
            out.append(text)
    return out


def build_tweets(rng):
    tweets = []

    def add(text, account, kind, role):
        tweets.append({"text": text, "account": account, "account_kind": kind, "role": role})

    jokes = unique_texts(rng, DIALOGS, JOKE_TAILS, 26) + unique_texts(rng, QA_JOKES, JOKE_TAILS, 26) + unique_texts(
        rng, KEYWORD_JOKES, JOKE_TAILS, 20
    )
    for i, text in enumerate(jokes):
        # Six jokes get lukewarm votes and aggregate to Doubtful.
        add(text, HUMOROUS_ACCOUNTS[i % 3], "humorous", "lukewarm" if i % 12 == 5 else "joke")
    for i, text in enumerate(unique_texts(rng, HUMOROUS_NON_JOKES, ["", "", " 😊", " #humor"], 18)):
        add(text, HUMOROUS_ACCOUNTS[i % 3], "humorous", "plain")

    for i, text in enumerate(unique_texts(rng, NEWS, [], 38, news_tail)):
        add(text, NEWS_ACCOUNTS[i % 3], "news", "plain")
    for i, text in enumerate(unique_texts(rng, REFLECTIONS, REFLECTION_TAILS, 36)):
        add(text, REFLECTION_ACCOUNTS[i % 3], "reflections", "plain")
    facts = unique_texts(rng, FACTS, FACT_TAILS, 30) + unique_texts(rng, FACT_QUESTIONS, FACT_TAILS, 6)
    for i, text in enumerate(facts):
        add(text, FACT_ACCOUNTS[i % 3], "curious_facts", "plain")

    rng.shuffle(tweets)
    for i, t in enumerate(tweets):
        t["id"] = f"t{i + 1:04d}"
    return tweets


def vote_for(rng, tweet):
    if rng.random() < 0.07:
        return "skip"
    role = tweet["role"]
    p_humor = {"joke": 0.9, "lukewarm": 0.45, "plain": 0.08}[role]
    if tweet["account_kind"] != "humorous":
        p_humor = 0.05
    if rng.random() < p_humor:
        return f"star{rng.choice([1, 2, 2, 3, 3, 3, 4, 4, 5])}"
    return "not_humor"


def build_annotations(rng, tweets):
    sessions = [f"s{i:03d}" for i in range(1, 61)]
    per_session = {s: [] for s in sessions}
    for t in tweets:
        if t["account_kind"] == "humorous":
            n = 5 if t["role"] == "lukewarm" else rng.randint(3, 6)
        else:
            n = rng.randint(0, 3)
        for s in rng.sample(sessions, n):
            per_session[s].append((t, vote_for(rng, t)))

    records = []
    base = 1_496_300_000_000
    for k, s in enumerate(sessions):
        clock = base + k * 3_600_000 + rng.randint(0, 600_000)
        items = per_session[s]
        rng.shuffle(items)
        for t, vote in items:
            clock += rng.randint(3_000, 25_000)
            records.append({"tweet_id": t["id"], "session_id": s, "timestamp_ms": clock, "vote": vote})

    # Two sessions clicking through at machine speed; the burst filter drops them.
    plain = [t for t in tweets if t["account_kind"] != "humorous"]
    for j, s in enumerate(["bot01", "bot02"]):
        clock = base + 90_000_000 + j * 1_000_000
        for t in rng.sample(plain, 12):
            clock += rng.randint(150, 900)
            records.append({"tweet_id": t["id"], "session_id": s, "timestamp_ms": clock, "vote": "star5"})

    records.sort(key=lambda r: (r["timestamp_ms"], r["session_id"]))
    return records


def write_lines(path, lines):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "data")
    args = parser.parse_args()

    rng = random.Random(SEED)
    tweets = build_tweets(rng)
    annotations = build_annotations(rng, tweets)

    out = args.out
    write_lines(
        out / "corpus/tweets.jsonl",
        [
            json.dumps({k: t[k] for k in ("id", "text", "account", "account_kind")}, ensure_ascii=False, sort_keys=True)
            for t in tweets
        ],
    )
    write_lines(
        out / "corpus/annotations.jsonl",
        [json.dumps(a, ensure_ascii=False, sort_keys=True) for a in annotations],
    )

    write_lines(out / "reference/jokes.txt", [j.replace("\n", " ") for j in REFERENCE_JOKES])
    write_lines(out / "reference/encyclopedia.txt", REFERENCE_ENCYCLOPEDIA)

    vocabulary = set()
    for t in tweets:
        vocabulary.update(words_of(t["text"]))
    for doc in REFERENCE_JOKES + REFERENCE_ENCYCLOPEDIA:
        vocabulary.update(words_of(doc))
    vocabulary -= INFORMAL
    base = sorted(vocabulary)
    dict_rng = random.Random(SEED + 1)
    wiktionary = sorted({w for w in base if dict_rng.random() < 0.85} | WIKTIONARY_ONLY)
    write_lines(out / "dict/spanish_base.txt", ["# Base Spanish word list (synthetic)."] + base)
    write_lines(out / "dict/web_cache.txt", ["# Words confirmed by web search, cached offline."] + sorted(WEB_ONLY))
    write_lines(out / "dict/wiktionary.txt", ["# Wiktionary headwords (synthetic subset)."] + wiktionary)

    counts = {}
    for t in tweets:
        counts[t["role"]] = counts.get(t["role"], 0) + 1
    print(f"{len(tweets)} tweets {counts}, {len(annotations)} annotations")


if __name__ == "__main__":
    main()
